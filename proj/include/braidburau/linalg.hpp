#pragma once

#include <cstdint>
#include <vector>

#include "braidburau/error.hpp"
#include "braidburau/laurent.hpp"
#include "braidburau/matrix.hpp"
#include "braidburau/polynomial.hpp"

namespace braidburau {

using PolyMatrix = Matrix<Poly>;
using PolyVector = std::vector<Poly>;

// Reduced row echelon form computed fraction-free (Bareiss-style
// Gauss-Jordan): at the end every pivot entry equals `pivot` and the pivot
// columns are zero off their pivot row.
struct Echelon {
  PolyMatrix a;
  std::vector<std::size_t> pivot_cols;
  Poly pivot = Poly(1);

  std::size_t rank() const { return pivot_cols.size(); }
};

inline Echelon fraction_free_echelon(PolyMatrix a) {
  Echelon out;
  Poly prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // First nonzero entry: deterministic pivoting.
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Poly piv = a(r, c);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Poly f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j == c) continue;
        a(i, j) = exact_divide(piv * a(i, j) - f * a(r, j), prev);
      }
      a(i, c) = Poly();
    }
    prev = piv;
    out.pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t k = 0; k < out.pivot_cols.size(); ++k)
    if (!(a(k, out.pivot_cols[k]) == prev)) throw InternalError("fraction-free elimination lost pivot balance");
  out.a = std::move(a);
  out.pivot = prev;
  return out;
}

// Clears Laurent denominators row by row (rescaling rows by units changes
// neither rank nor kernel).
inline PolyMatrix to_poly_matrix(const LaurentMatrix& m, std::int64_t D) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<RationalFunction> row;
    std::size_t lift = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(to_fraction(m(i, j), D));
      lift = std::max(lift, static_cast<std::size_t>(row.back().den().degree()));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = row[j];
      if (x.is_zero()) continue;
      // Denominators of Laurent entries are pure powers of z.
      out(i, j) = exact_divide(x.num().shift_up(lift), x.den());
    }
  }
  return out;
}

inline std::size_t rank(const PolyMatrix& m) { return fraction_free_echelon(m).rank(); }

// Divide out the polynomial gcd of the entries so kernel vectors stay small.
inline PolyVector primitive_vector(PolyVector v) {
  Poly g;
  for (const auto& x : v) g = gcd(g, x);
  if (g.is_zero()) return v;
  if (g.low_degree() > 0) g = g.shift_down(g.low_degree());
  for (auto& x : v)
    if (!x.is_zero()) x = exact_divide(x, g);
  // The leading nonzero entry is made to have positive leading coefficient.
  for (const auto& x : v)
    if (!x.is_zero()) {
      if (x.lead() < 0)
        for (auto& y : v) y = -y;
      break;
    }
  return v;
}

// Right kernel {v : m v = 0}, one vector per free column in increasing
// order; vector k is zero on every other free column.
struct Kernel {
  std::vector<PolyVector> basis;
  std::vector<std::size_t> free_cols;
};

inline Kernel kernel(const PolyMatrix& m) {
  Echelon e = fraction_free_echelon(m);
  Kernel out;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    PolyVector v(m.cols());
    v[f] = e.pivot;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.a(k, f);
    out.basis.push_back(primitive_vector(std::move(v)));
    out.free_cols.push_back(f);
  }
  return out;
}

// Characteristic polynomial det(x I - A) by Faddeev-LeVerrier; coefficients
// lowest degree first, monic of degree dim A.
inline std::vector<RationalFunction> char_poly(const FractionMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("characteristic polynomial needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<RationalFunction> c(n + 1);
  c[n] = RationalFunction(1);
  const FractionMatrix id = FractionMatrix::identity(n, RationalFunction(1));
  FractionMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + id.map([&](const RationalFunction& x) { return x * c[n - k + 1]; });
    FractionMatrix amk = a * mk;
    RationalFunction tr;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -(tr / RationalFunction(static_cast<int>(k)));
  }
  return c;
}

inline FractionMatrix to_fraction_matrix(const LaurentMatrix& m, std::int64_t D) {
  return m.map([&](const RationalLaurent& x) { return to_fraction(x, D); });
}

inline std::int64_t exponent_denominator(const LaurentMatrix& m) {
  std::int64_t d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d = std::lcm(d, m(i, j).exponent_denominator());
  return d;
}

}  // namespace braidburau
