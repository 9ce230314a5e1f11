#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "braidburau/burau.hpp"
#include "braidburau/cell_complex.hpp"
#include "braidburau/fox.hpp"
#include "braidburau/labeled_matrix.hpp"
#include "braidburau/laurent.hpp"
#include "braidburau/linalg.hpp"

namespace braidburau {

// Local coefficients: every f_j |-> t = q^t_exponent, every braid letter
// tau_i^{+-1} |-> q^{+-u_exponent}.
struct Specialization {
  Rational t_exponent = 1;
  Rational u_exponent = 0;

  bool degenerate() const { return t_exponent == Rational(0); }
  std::int64_t denominator() const { return std::lcm(t_exponent.denominator(), u_exponent.denominator()); }
};

// Formal boundary over Z[F_n]: rows follow CellComplexSpec::objects(), columns
// CellComplexSpec::cells(); d[s] = (gamma_x s gamma_y^-1)[y] - [x].
inline FreeMatrix boundary_matrix(int n) {
  CellComplexSpec cx(n);
  auto cells = cx.cells();
  FreeMatrix d(cx.objects().size(), cells.size());
  for (const Cell& s : cells) {
    Object x = s.source(), y = s.target();
    GroupoidPath loop = compose_paths(compose_paths(base_path(cx, x), GroupoidPath::edge(cx, s)),
                                      invert_path(base_path(cx, y)));
    std::size_t col = cx.cell_position(s);
    d(cx.object_position(y), col) += FreeRing(loop_word(loop));
    d(cx.object_position(x), col) -= free_one();
  }
  return d;
}

inline LaurentMatrix boundary_matrix(int n, const Specialization& sp) {
  return specialize_matrix(boundary_matrix(n), sp.t_exponent);
}

// Coefficient row vector of a chain, in cell order.
inline std::vector<FreeRing> chain_vector(int n, const ChainElement& ch) {
  CellComplexSpec cx(n);
  std::vector<FreeRing> v(cx.cells().size());
  for (const auto& [c, x] : ch.terms()) {
    if (!cx.contains(c)) throw IndexError("chain cell outside the complex: " + c.to_string());
    v[cx.cell_position(c)] = x;
  }
  return v;
}

// d applied to a chain: sum_s coeff_s * d[s] (left module action).
inline std::vector<FreeRing> apply_boundary(int n, const ChainElement& ch) {
  FreeMatrix d = boundary_matrix(n);
  std::vector<FreeRing> v = chain_vector(n, ch), out(d.rows());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t s = 0; s < d.cols(); ++s)
      if (!v[s].is_zero() && !d(r, s).is_zero()) out[r] += v[s] * d(r, s);
  return out;
}

inline std::vector<RationalLaurent> apply_boundary(int n, const ChainElement& ch, const Specialization& sp) {
  LaurentMatrix d = boundary_matrix(n, sp);
  std::vector<FreeRing> v = chain_vector(n, ch);
  std::vector<RationalLaurent> out(d.rows());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t s = 0; s < d.cols(); ++s) out[r] += specialize_entry(v[s], sp.t_exponent) * d(r, s);
  return out;
}

struct HomologyResult {
  int n = 0;
  Specialization spec;
  bool degenerate = false;
  std::size_t dim_h0 = 0;
  std::size_t dim_h1 = 0;
  std::int64_t denominator = 1;  // polynomials are in z = q^(1/denominator)
  Kernel h1;                     // cycles; no 2-cells, so H_1 = ker d
};

inline HomologyResult homology(int n, const Specialization& sp = {}) {
  if (n < 1) throw IndexError("homology needs n >= 1");
  HomologyResult out;
  out.n = n;
  out.spec = sp;
  out.degenerate = sp.degenerate();
  out.denominator = sp.denominator();
  LaurentMatrix d = boundary_matrix(n, sp);
  PolyMatrix pd = to_poly_matrix(d, out.denominator);
  out.h1 = kernel(pd);
  std::size_t r = d.cols() - out.h1.basis.size();
  out.dim_h0 = d.rows() - r;
  out.dim_h1 = out.h1.basis.size();
  return out;
}

// Cellular action of b with the local coefficients substituted. With f_j all
// sent to the same t the entries are fixed by the Artin action, so the
// matrices of a word multiply plainly.
inline LaurentMatrix specialized_cellular_matrix(int n, const Braid& b, const Specialization& sp) {
  LabeledMatrix m = cellular_matrix(n, b);
  RationalLaurent u = RationalLaurent::monomial(sp.u_exponent * b.word().total_exponent());
  return specialize_matrix(m.matrix, sp.t_exponent).map([&](const RationalLaurent& x) { return u * x; });
}

// Expresses h_k M in the kernel basis (row convention: R(k, l) is the
// coefficient of h_l in h_k M). Kernel vector l vanishes on every free
// column other than its own, so the coefficients are read off there.
inline FractionMatrix restrict_to_cycles(const HomologyResult& h, const LaurentMatrix& m) {
  const auto& basis = h.h1.basis;
  const std::size_t k = basis.size();
  FractionMatrix fm = to_fraction_matrix(m, h.denominator);
  std::vector<std::vector<RationalFunction>> hv;
  for (const auto& v : basis) {
    std::vector<RationalFunction> row;
    for (const auto& x : v) row.emplace_back(x);
    hv.push_back(std::move(row));
  }
  FractionMatrix out(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<RationalFunction> img(fm.cols());
    for (std::size_t s = 0; s < fm.rows(); ++s)
      if (!hv[a][s].is_zero())
        for (std::size_t c = 0; c < fm.cols(); ++c)
          if (!fm(s, c).is_zero()) img[c] += hv[a][s] * fm(s, c);
    for (std::size_t l = 0; l < k; ++l) out(a, l) = img[h.h1.free_cols[l]] / hv[l][h.h1.free_cols[l]];
    for (std::size_t c = 0; c < img.size(); ++c) {
      RationalFunction rest = img[c];
      for (std::size_t l = 0; l < k; ++l) rest -= out(a, l) * hv[l][c];
      if (!rest.is_zero()) throw InternalError("cycle space is not invariant under the braid action");
    }
  }
  return out;
}

inline FractionMatrix monodromy_action(const Braid& b, const HomologyResult& h) {
  if (b.strands() != h.n) throw MixedGroupError("braid and homology have different n");
  return restrict_to_cycles(h, specialized_cellular_matrix(h.n, b, h.spec));
}

// Product of the generator monodromies in reading order.
inline FractionMatrix monodromy_of_word(const Braid& b, const HomologyResult& h) {
  if (b.strands() != h.n) throw MixedGroupError("braid and homology have different n");
  FractionMatrix acc = FractionMatrix::identity(h.dim_h1, RationalFunction(1));
  for (const Letter& l : b.word().letters()) acc = acc * monodromy_action(Braid::generator(h.n, l.gen, l.sign), h);
  return acc;
}

// Standard (n-1)-dimensional reduced Burau matrix of sigma_i over Z[t, t^-1]:
// the identity with the block [[1,0,0],[t,-t,1],[0,0,1]] centred on row i,
// cropped at the ends (sigma_1 = [[-t,1],[0,1]] ⊕ 1, sigma_{n-1} = 1 ⊕ [[1,0],[t,-t]]).
inline LaurentMatrix classical_reduced_burau(int n, int i, int sign = 1) {
  if (n < 2 || i < 1 || i > n - 1) throw IndexError("classical reduced Burau index out of range");
  auto dim = static_cast<std::size_t>(n - 1);
  auto row = static_cast<std::size_t>(i - 1);
  const RationalLaurent t = RationalLaurent::monomial(1), ti = RationalLaurent::monomial(-1);
  LaurentMatrix m = LaurentMatrix::identity(dim, RationalLaurent(1));
  if (sign > 0) {
    m(row, row) = -t;
    if (row > 0) m(row, row - 1) = t;
    if (row + 1 < dim) m(row, row + 1) = RationalLaurent(1);
  } else {
    // Inverse of the block above: [[1,0,0],[1,-t^-1,t^-1],[0,0,1]].
    m(row, row) = -ti;
    if (row > 0) m(row, row - 1) = RationalLaurent(1);
    if (row + 1 < dim) m(row, row + 1) = ti;
  }
  return m;
}

inline LaurentMatrix classical_reduced_burau(int n, const Braid& b) {
  auto dim = static_cast<std::size_t>(n - 1);
  LaurentMatrix acc = LaurentMatrix::identity(dim, RationalLaurent(1));
  for (const Letter& l : b.word().letters()) acc = acc * classical_reduced_burau(n, l.gen, l.sign);
  return acc;
}

}  // namespace braidburau
