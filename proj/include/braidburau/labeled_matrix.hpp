#pragma once

#include <optional>
#include <string>

#include "braidburau/braid.hpp"
#include "braidburau/group_ring.hpp"
#include "braidburau/matrix.hpp"

namespace braidburau {

using FreeMatrix = Matrix<FreeRing>;

// A matrix over Z[F_n] together with the braid it represents. The pair
// stands for the element label * matrix of Mat(Z[B_n |x F_n]).
struct LabeledMatrix {
  FreeMatrix matrix;
  std::optional<Braid> label;

  std::size_t rows() const { return matrix.rows(); }
  std::size_t cols() const { return matrix.cols(); }
};

inline FreeMatrix free_identity(std::size_t n) { return FreeMatrix::identity(n, free_one()); }

inline LabeledMatrix labeled_identity(int strands, std::size_t dim) {
  return {free_identity(dim), Braid::identity(strands)};
}

// Entry-wise Artin action.
inline FreeMatrix apply_braid_to_entries(const Braid& b, const FreeMatrix& m) {
  if (b.word().is_identity()) return m;
  FreeAutomorphism a = artin_automorphism(b);
  return m.map([&](const FreeRing& x) { return x.map_elements([&](const FreeWord& w) { return a.apply(w); }); });
}

// Crossed-composition laws for labeled matrices (b.M)(b'.M') = bb'.M''.
//   kPinned:    M'' = act(b')(M) * M'
//   kAlternate: M'' = M * act(b)(M')
// kPinned is the law under which the groupoid-derived families satisfy the
// braid relations; kAlternate is kept only so tests can show it fails.
enum class CompositionLaw { kPinned, kAlternate };

inline LabeledMatrix twisted_compose(const LabeledMatrix& a, const LabeledMatrix& b,
                                     CompositionLaw law = CompositionLaw::kPinned) {
  if (!a.label || !b.label) throw ShapeError("twisted_compose needs labeled matrices");
  if (a.label->strands() != b.label->strands()) throw MixedGroupError("labels on different strand counts");
  FreeMatrix m = law == CompositionLaw::kPinned ? apply_braid_to_entries(*b.label, a.matrix) * b.matrix
                                                : a.matrix * apply_braid_to_entries(*a.label, b.matrix);
  return {std::move(m), *a.label * *b.label};
}

// Entries identical and labels equal as braids.
inline bool labeled_equal(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (!(a.matrix == b.matrix)) return false;
  if (a.label.has_value() != b.label.has_value()) return false;
  if (!a.label) return true;
  if (a.label->strands() != b.label->strands()) return false;
  return braid_equal(*a.label, *b.label);
}

}  // namespace braidburau
