#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidburau/braid.hpp"
#include "braidburau/cell_complex.hpp"
#include "braidburau/fox.hpp"
#include "braidburau/group_ring.hpp"
#include "braidburau/groupoid_action.hpp"
#include "braidburau/labeled_matrix.hpp"
#include "braidburau/laurent.hpp"

namespace braidburau {

// Braid-valued families: the reduced one acts on the [w_0..w_{n-1}] quotient
// of the cellular chains, the unreduced one on the span of delta(f_1..f_n).
enum class BurauForm { kReduced, kUnreduced };

inline std::string to_string(BurauForm f) { return f == BurauForm::kReduced ? "reduced" : "unreduced"; }

struct BurauFamily {
  int n = 0;
  BurauForm form = BurauForm::kReduced;
  std::vector<LabeledMatrix> generators;  // tau_1..tau_{n-1}
  std::vector<LabeledMatrix> inverses;    // tau_1^-1..tau_{n-1}^-1

  const LabeledMatrix& generator(int i, int sign = 1) const {
    if (i < 1 || i > n - 1) throw IndexError("family generator index out of range");
    return sign > 0 ? generators[i - 1] : inverses[i - 1];
  }
};

// Row s of the cellular action of e = act(b) on all 3n cells:
//   [s] |-> (e(gamma_x) gamma_{e(x)}^-1) delta(e(s)),  s in Hom(x, z).
// Rows and columns follow CellComplexSpec::cells().
inline LabeledMatrix cellular_matrix(int n, const Braid& b) {
  CellComplexSpec cx(n);
  if (b.strands() != n) throw MixedGroupError("braid strand count does not match the complex");
  auto cells = cx.cells();
  FreeMatrix m(cells.size(), cells.size());
  for (const Cell& s : cells) {
    Object x = s.source();
    GroupoidPath moved_base = groupoid_act(b, base_path(cx, x));
    GroupoidPath back = invert_path(base_path(cx, act_on_object(b, x)));
    FreeRing coeff(loop_word(compose_paths(moved_base, back)));
    ChainElement row = coeff * fox_derive(groupoid_act(b, GroupoidPath::edge(cx, s)));
    for (const auto& [cell, x_coeff] : row.terms()) m(cx.cell_position(s), cx.cell_position(cell)) = x_coeff;
  }
  return {std::move(m), b};
}

// Matrix of an arbitrary braid computed from the groupoid action directly.
inline LabeledMatrix burau_matrix_from_groupoid(int n, BurauForm form, const Braid& b) {
  CellComplexSpec cx(n);
  auto dim = static_cast<std::size_t>(n);
  if (form == BurauForm::kReduced) {
    // Quotient by the invariant span of the [l] cells: keep the w block.
    LabeledMatrix full = cellular_matrix(n, b);
    return {full.matrix.block(0, 0, dim, dim), b};
  }
  FreeMatrix m(dim, dim);
  for (int j = 1; j <= n; ++j) {
    ChainElement image = fox_derive(groupoid_act(b, loop_generator(cx, j)));
    // delta(f_k) is the only basis chain containing [L_k^+], with coefficient 1.
    ChainElement rest = image;
    for (int k = 1; k <= n; ++k) {
      FreeRing c = image.coefficient(Cell::l_plus(k));
      m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = c;
      rest -= c * fox_derive(loop_generator(cx, k));
    }
    if (!rest.is_zero()) throw InternalError("delta(b(f_j)) not in the span of delta(f_k): " + rest.to_string());
  }
  return {std::move(m), b};
}

inline BurauFamily burau_from_groupoid(int n, BurauForm form) {
  if (n < 2) throw IndexError("Burau families need n >= 2");
  BurauFamily fam{n, form, {}, {}};
  for (int i = 1; i <= n - 1; ++i) {
    fam.generators.push_back(burau_matrix_from_groupoid(n, form, Braid::generator(n, i, 1)));
    fam.inverses.push_back(burau_matrix_from_groupoid(n, form, Braid::generator(n, i, -1)));
  }
  return fam;
}

namespace detail {

// Writes a block template into an identity matrix at `offset`, dropping rows
// and columns that fall outside.
inline void place_block(FreeMatrix& m, std::size_t offset, const std::vector<std::vector<FreeRing>>& blk) {
  for (std::size_t r = 0; r < blk.size(); ++r)
    for (std::size_t c = 0; c < blk[r].size(); ++c) {
      std::size_t rr = offset + r, cc = offset + c;
      if (rr < m.rows() && cc < m.cols()) m(rr, cc) = blk[r][c];
    }
}

}  // namespace detail

// The closed-form families. Reduced tau_i acts on rows w_{i-1}, w_i, w_{i+1}:
//   tau_i    [[1, f_i, 0], [0, -f_i, 0], [0, 1, 1]]
//   tau_i^-1 [[1, 1, 0], [0, -f_{i+1}^-1, 0], [0, f_{i+1}^-1, 1]]
// truncated at the bottom for i = n-1 (there is no w_n). Unreduced tau_i
// acts on rows f_i, f_{i+1}:
//   tau_i    [[1 - f_i f_{i+1} f_i^-1, f_i], [1, 0]]
//   tau_i^-1 [[0, 1], [f_{i+1}^-1, f_{i+1}^-1 f_i - f_{i+1}^-1]]
inline BurauFamily burau_closed_form(int n, BurauForm form) {
  if (n < 2) throw IndexError("Burau families need n >= 2");
  BurauFamily fam{n, form, {}, {}};
  auto dim = static_cast<std::size_t>(n);
  const FreeRing one = free_one(), zero{};
  for (int i = 1; i <= n - 1; ++i) {
    const FreeRing fi = free_gen(i), fi1 = free_gen(i + 1), fi1_inv = free_gen(i + 1, -1);
    FreeMatrix pos = free_identity(dim), neg = free_identity(dim);
    if (form == BurauForm::kReduced) {
      auto offset = static_cast<std::size_t>(i - 1);
      detail::place_block(pos, offset, {{one, fi, zero}, {zero, -fi, zero}, {zero, one, one}});
      detail::place_block(neg, offset, {{one, one, zero}, {zero, -fi1_inv, zero}, {zero, fi1_inv, one}});
    } else {
      auto offset = static_cast<std::size_t>(i - 1);
      detail::place_block(pos, offset, {{one - fi * fi1 * free_gen(i, -1), fi}, {one, zero}});
      detail::place_block(neg, offset, {{zero, one}, {fi1_inv, fi1_inv * fi - fi1_inv}});
    }
    fam.generators.push_back({std::move(pos), Braid::generator(n, i, 1)});
    fam.inverses.push_back({std::move(neg), Braid::generator(n, i, -1)});
  }
  return fam;
}

// Labeled matrix of a braid word: the generator matrices folded with the
// chosen crossed-composition law. Inverse letters use the inverse family.
inline LabeledMatrix burau_of_braid(const BurauFamily& fam, const Braid& b,
                                    CompositionLaw law = CompositionLaw::kPinned) {
  if (b.strands() != fam.n) throw MixedGroupError("braid and family have different n");
  LabeledMatrix acc = labeled_identity(fam.n, static_cast<std::size_t>(fam.n));
  for (const Letter& l : b.word().letters()) acc = twisted_compose(acc, fam.generator(l.gen, l.sign), law);
  return acc;
}

// A family after substituting every f_j and every braid label by monomials.
struct SpecializedFamily {
  int n = 0;
  BurauForm form = BurauForm::kReduced;
  std::vector<LaurentMatrix> generators;
  std::vector<LaurentMatrix> inverses;

  const LaurentMatrix& generator(int i, int sign = 1) const {
    if (i < 1 || i > n - 1) throw IndexError("family generator index out of range");
    return sign > 0 ? generators[i - 1] : inverses[i - 1];
  }
};

// f_j -> q^{t_exponent} for every j.
inline RationalLaurent specialize_entry(const FreeRing& x, Rational t_exponent) {
  RationalLaurent out;
  for (const auto& [k, term] : x.terms())
    out += RationalLaurent::monomial(t_exponent * term.element.total_exponent(), term.coeff);
  return out;
}

inline LaurentMatrix specialize_matrix(const FreeMatrix& m, Rational t_exponent) {
  return m.map([&](const FreeRing& x) { return specialize_entry(x, t_exponent); });
}

// f_j -> q^{t_exponent}, tau_i^{+-1} -> q^{+-u_exponent}. Exponent sums are
// act-invariant, so the twist disappears and products become plain.
inline SpecializedFamily specialize_family(const BurauFamily& fam, Rational t_exponent, Rational u_exponent = 0) {
  SpecializedFamily out{fam.n, fam.form, {}, {}};
  auto scaled = [&](const LabeledMatrix& lm) {
    int exp_sum = lm.label ? lm.label->word().total_exponent() : 0;
    RationalLaurent u = RationalLaurent::monomial(u_exponent * exp_sum);
    return specialize_matrix(lm.matrix, t_exponent).map([&](const RationalLaurent& e) { return u * e; });
  };
  for (const auto& g : fam.generators) out.generators.push_back(scaled(g));
  for (const auto& g : fam.inverses) out.inverses.push_back(scaled(g));
  return out;
}

// tau_i -> 1, f_j -> t: the classical Burau matrices over Z[t, t^-1].
inline SpecializedFamily specialize_classical(const BurauFamily& fam) { return specialize_family(fam, Rational(1)); }

inline LaurentMatrix specialized_of_braid(const SpecializedFamily& fam, const Braid& b) {
  if (b.strands() != fam.n) throw MixedGroupError("braid and family have different n");
  auto dim = static_cast<std::size_t>(fam.n);
  LaurentMatrix acc = LaurentMatrix::identity(dim, RationalLaurent(1));
  for (const Letter& l : b.word().letters()) acc = acc * fam.generator(l.gen, l.sign);
  return acc;
}

using SemidirectMatrix = Matrix<SemidirectRing>;

// One level of iteration: entries of the B_n family are pushed into
// Z[B_{n+1}] by embed_semidirect and then replaced by the braid-valued
// matrix of B_{n+1}, giving n(n+1)-dimensional matrices over
// Z[B_{n+1} |x F_{n+1}].
struct IteratedFamily {
  int n = 0;  // strands of the original family
  BurauForm form = BurauForm::kReduced;
  std::vector<SemidirectMatrix> generators;
  std::vector<SemidirectMatrix> inverses;
  std::vector<Braid> labels;  // sigma_i in B_{n+1}

  const SemidirectMatrix& generator(int i, int sign = 1) const {
    if (i < 1 || i > n - 1) throw IndexError("family generator index out of range");
    return sign > 0 ? generators[i - 1] : inverses[i - 1];
  }
};

// beta . M_beta as a matrix over Z[B |x F].
inline SemidirectMatrix braid_valued_image(const BurauFamily& fam, const Braid& beta) {
  LabeledMatrix lm = burau_of_braid(fam, beta);
  return lm.matrix.map([&](const FreeRing& x) {
    SemidirectRing out;
    for (const auto& [k, term] : x.terms()) out.add_term(SemidirectElement(beta, term.element), term.coeff);
    return out;
  });
}

// Image of a Z[F_n] element: linear over terms, each word u sent to the
// braid-valued matrix of embed(e, u) in B_{n+1}.
inline SemidirectMatrix iterate_entry(const BurauFamily& upper, const FreeRing& x,
                                      std::map<std::string, SemidirectMatrix>& cache) {
  auto dim = static_cast<std::size_t>(upper.n);
  SemidirectMatrix out(dim, dim);
  for (const auto& [k, term] : x.terms()) {
    auto it = cache.find(k);
    if (it == cache.end()) {
      Braid beta = embed_semidirect(SemidirectElement(Braid::identity(upper.n - 1), term.element));
      it = cache.emplace(k, braid_valued_image(upper, beta)).first;
    }
    SemidirectMatrix scaled = it->second.map([&](const SemidirectRing& e) { return term.coeff * e; });
    out = out + scaled;
  }
  return out;
}

inline SemidirectMatrix iterate_matrix(const BurauFamily& upper, const LabeledMatrix& lm,
                                       std::map<std::string, SemidirectMatrix>& cache) {
  if (!lm.label) throw ShapeError("iterate needs labeled matrices");
  auto small = lm.rows(), block = static_cast<std::size_t>(upper.n);
  SemidirectMatrix entries(small * block, small * block);
  for (std::size_t r = 0; r < small; ++r)
    for (std::size_t c = 0; c < small; ++c) {
      SemidirectMatrix img = iterate_entry(upper, lm.matrix(r, c), cache);
      for (std::size_t a = 0; a < block; ++a)
        for (std::size_t b = 0; b < block; ++b) entries(r * block + a, c * block + b) = img(a, b);
    }
  // The label contributes the block diagonal of its own image.
  Braid label_up = embed_semidirect(SemidirectElement(*lm.label));
  SemidirectMatrix lab = braid_valued_image(upper, label_up);
  SemidirectMatrix diag(small * block, small * block);
  for (std::size_t r = 0; r < small; ++r)
    for (std::size_t a = 0; a < block; ++a)
      for (std::size_t b = 0; b < block; ++b) diag(r * block + a, r * block + b) = lab(a, b);
  return diag * entries;
}

inline IteratedFamily iterate_once(const BurauFamily& fam) {
  BurauFamily upper = burau_closed_form(fam.n + 1, fam.form);
  IteratedFamily out{fam.n, fam.form, {}, {}, {}};
  std::map<std::string, SemidirectMatrix> cache;
  for (int i = 1; i <= fam.n - 1; ++i) {
    out.generators.push_back(iterate_matrix(upper, fam.generator(i, 1), cache));
    out.inverses.push_back(iterate_matrix(upper, fam.generator(i, -1), cache));
    out.labels.push_back(Braid::generator(fam.n + 1, i));
  }
  return out;
}

inline SemidirectMatrix iterated_of_braid(const IteratedFamily& fam, const Braid& b) {
  if (b.strands() != fam.n) throw MixedGroupError("braid and family have different n");
  auto dim = static_cast<std::size_t>(fam.n * (fam.n + 1));
  SemidirectMatrix acc = SemidirectMatrix::identity(dim, SemidirectRing(SemidirectElement::identity(fam.n + 1)));
  for (const Letter& l : b.word().letters()) acc = acc * fam.generator(l.gen, l.sign);
  return acc;
}

}  // namespace braidburau
