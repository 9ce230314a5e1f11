#pragma once

#include "braidburau/braid.hpp"
#include "braidburau/cell_complex.hpp"

namespace braidburau {

namespace detail {

inline GroupoidPath word_path(const CellComplexSpec& cx, Object source, std::initializer_list<Edge> edges) {
  return GroupoidPath::from_edges(cx, source, std::vector<Edge>(edges));
}

}  // namespace detail

// Image of an object under tau_i^{+-1}: the half twist swaps
// i-eps <-> i+1+eps and i+eps <-> i+1-eps, fixing everything else.
inline Object act_on_object(int i, Object x) {
  if (x.point == i) return {i + 1, -x.side};
  if (x.point == i + 1) return {i, -x.side};
  return x;
}

// Image of a single 1-cell under tau_i^sign.
//   tau_i:    w_{i-1} -> w_{i-1} L_i^+ w_i L_{i+1}^+
//             w_i     -> w_i^-1
//             w_{i+1} -> (L_i^-)^-1 w_i (L_{i+1}^-)^-1 w_{i+1}
//             L_i^+- -> L_{i+1}^-+,  L_{i+1}^+- -> L_i^-+
//   tau_i^-1: w_{i-1} -> w_{i-1} (L_i^-)^-1 w_i (L_{i+1}^-)^-1
//             w_i     -> w_i^-1
//             w_{i+1} -> L_i^+ w_i L_{i+1}^+ w_{i+1}
//             (same swap on the L cells)
inline GroupoidPath act_on_cell(const CellComplexSpec& cx, int i, int sign, Cell c) {
  if (i < 1 || i > cx.n() - 1) throw IndexError("braid generator index " + std::to_string(i) + " out of range");
  if (!cx.contains(c)) throw IndexError("cell " + c.to_string() + " not in complex");
  using detail::word_path;
  const Edge wim1{Cell::w(i - 1), 1}, wi{Cell::w(i), 1};
  const Edge lp_i{Cell::l_plus(i), 1}, lp_i1{Cell::l_plus(i + 1), 1};
  const Edge lm_i_inv{Cell::l_minus(i), -1}, lm_i1_inv{Cell::l_minus(i + 1), -1};
  switch (c.kind) {
    case CellKind::kW:
      if (c.index == i - 1) {
        if (sign > 0) return word_path(cx, c.source(), {wim1, lp_i, wi, lp_i1});
        return word_path(cx, c.source(), {wim1, lm_i_inv, wi, lm_i1_inv});
      }
      if (c.index == i) return GroupoidPath::edge(cx, c, -1);
      if (c.index == i + 1) {
        const Edge wi1{Cell::w(i + 1), 1};
        if (sign > 0) return word_path(cx, Object{i, -1}, {lm_i_inv, wi, lm_i1_inv, wi1});
        return word_path(cx, Object{i, -1}, {lp_i, wi, lp_i1, wi1});
      }
      return GroupoidPath::edge(cx, c);
    case CellKind::kLPlus:
    case CellKind::kLMinus: {
      if (c.index != i && c.index != i + 1) return GroupoidPath::edge(cx, c);
      int other = c.index == i ? i + 1 : i;
      Cell img = c.kind == CellKind::kLPlus ? Cell::l_minus(other) : Cell::l_plus(other);
      return GroupoidPath::edge(cx, img);
    }
  }
  throw InternalError("unreachable cell kind");
}

// groupoid_act for one generator tau_i^sign, extended functorially.
inline GroupoidPath groupoid_act(int i, int sign, const GroupoidPath& p) {
  const CellComplexSpec& cx = p.complex();
  if (i < 1 || i > cx.n() - 1) throw IndexError("braid generator index " + std::to_string(i) + " out of range");
  GroupoidPath out = GroupoidPath::identity(cx, act_on_object(i, p.source()));
  for (const Edge& e : p.edges()) {
    GroupoidPath img = act_on_cell(cx, i, sign, e.cell);
    out = compose_paths(out, e.orientation > 0 ? img : invert_path(img));
  }
  return out;
}

inline GroupoidPath groupoid_act(int i, const GroupoidPath& p) { return groupoid_act(i, 1, p); }

// Same reading-order convention as artin_automorphism.
inline GroupoidPath groupoid_act(const Braid& b, const GroupoidPath& p) {
  if (b.strands() != p.complex().n()) throw MixedGroupError("braid and complex have different n");
  GroupoidPath out = p;
  for (const Letter& l : b.word().letters()) out = groupoid_act(l.gen, l.sign, out);
  return out;
}

inline Object act_on_object(const Braid& b, Object x) {
  for (const Letter& l : b.word().letters()) x = act_on_object(l.gen, x);
  return x;
}

}  // namespace braidburau
