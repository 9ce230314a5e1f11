#pragma once

#include <string>
#include <vector>

#include "braidburau/braid.hpp"
#include "braidburau/burau.hpp"
#include "braidburau/cell_complex.hpp"
#include "braidburau/groupoid_action.hpp"

namespace braidburau {

// One defining relation of B_n, lhs = rhs.
struct RelationInstance {
  Braid lhs;
  Braid rhs;
  bool far = false;  // s_i s_j = s_j s_i, |i - j| >= 2

  std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

inline std::vector<RelationInstance> braid_relations(int n) {
  std::vector<RelationInstance> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      Braid si = Braid::generator(n, i), sj = Braid::generator(n, j);
      if (j == i + 1)
        out.push_back({si * sj * si, sj * si * sj, false});
      else
        out.push_back({si * sj, sj * si, true});
    }
  return out;
}

// Artin images of all f_k agree as reduced words.
inline bool artin_relation_holds(const RelationInstance& r) {
  return artin_automorphism(r.lhs).images() == artin_automorphism(r.rhs).images();
}

// Both sides act identically on every generating cell.
inline bool groupoid_relation_holds(const RelationInstance& r) {
  CellComplexSpec cx(r.lhs.strands());
  for (const Cell& c : cx.cells()) {
    GroupoidPath e = GroupoidPath::edge(cx, c);
    if (!(groupoid_act(r.lhs, e) == groupoid_act(r.rhs, e))) return false;
  }
  return true;
}

inline bool family_relation_holds(const BurauFamily& fam, const RelationInstance& r,
                                  CompositionLaw law = CompositionLaw::kPinned) {
  return labeled_equal(burau_of_braid(fam, r.lhs, law), burau_of_braid(fam, r.rhs, law));
}

inline bool specialized_relation_holds(const SpecializedFamily& fam, const RelationInstance& r) {
  return specialized_of_braid(fam, r.lhs) == specialized_of_braid(fam, r.rhs);
}

}  // namespace braidburau
