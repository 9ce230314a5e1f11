#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidburau/burau.hpp"
#include "braidburau/error.hpp"
#include "braidburau/rational.hpp"

namespace braidburau {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Finite-type Cartan data in Bourbaki numbering with
// c_ij = 2 (a_i, a_j) / (a_i, a_i) and short roots normalized to (a, a) = 2.
struct CartanDatum {
  char type = 'A';
  int rank = 1;
  std::vector<std::vector<int>> cartan;
  std::vector<Rational> d;  // (a_i, a_i) / 2
  RationalMatrix root_form;    // (a_i, a_j) = d_i c_ij
  RationalMatrix weight_form;  // (w_i, w_j)

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

namespace detail {

inline RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m, inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) throw InternalError("singular Cartan matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= s;
      inv[c][j] /= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == Rational(0)) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

inline CartanDatum cartan_datum(char type, int rank) {
  auto bad = [&] { return IndexError("no simple Lie algebra of type " + std::string(1, type) + std::to_string(rank)); };
  if (rank < 1) throw bad();
  switch (type) {
    case 'A': break;
    case 'B': if (rank < 2) throw bad(); break;
    case 'C': if (rank < 2) throw bad(); break;
    case 'D': if (rank < 4) throw bad(); break;
    case 'E': if (rank < 6 || rank > 8) throw bad(); break;
    case 'F': if (rank != 4) throw bad(); break;
    case 'G': if (rank != 2) throw bad(); break;
    default: throw bad();
  }
  const auto r = static_cast<std::size_t>(rank);
  CartanDatum out;
  out.type = type;
  out.rank = rank;
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
  std::vector<Rational> d(r, Rational(1));
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':  // a_n short
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 1][r - 2] = -2;
      for (std::size_t i = 0; i + 1 < r; ++i) d[i] = 2;
      break;
    case 'C':  // a_n long
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 2][r - 1] = -2;
      d[r - 1] = 2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'E':  // 1-3-4-5-6(-7-8), 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'F':  // a_1, a_2 long
      link(0, 1);
      link(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      d = {2, 2, 1, 1};
      break;
    case 'G':  // a_1 short
      c[0][1] = -3;
      c[1][0] = -1;
      d = {1, 3};
      break;
  }
  out.cartan = c;
  out.d = d;
  RationalMatrix cm(r, std::vector<Rational>(r));
  out.root_form.assign(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      cm[i][j] = c[i][j];
      out.root_form[i][j] = d[i] * c[i][j];
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out.root_form[i][j] != out.root_form[j][i]) throw InternalError("symmetrizer does not symmetrize " + out.name());
  // (w_i, a_j) = d_j delta_ij, and a_i = sum_k c_ki w_k, so
  // (w_i, w_j) = d_i (C^-1)_ij.
  RationalMatrix ci = detail::invert(cm);
  out.weight_form.assign(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.weight_form[i][j] = d[i] * ci[i][j];
  return out;
}

// "A1", "B3", "G2".
inline CartanDatum cartan_datum(std::string_view name) {
  if (name.size() < 2) throw ParseError("algebra name like A2 expected, got '" + std::string(name) + "'");
  int rank = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9') throw ParseError("bad algebra rank in '" + std::string(name) + "'");
    rank = rank * 10 + (ch - '0');
    if (rank > 64) throw ParseError("algebra rank too large in '" + std::string(name) + "'");
  }
  return cartan_datum(name[0], rank);
}

// pi(j) = i iff k_1 + ... + k_{i-1} < j <= k_1 + ... + k_i (1-based).
inline int color_map(int j, const std::vector<int>& k) {
  int m = 0;
  for (int x : k) {
    if (x < 0) throw IndexError("k-vector entries must be nonnegative");
    m += x;
  }
  if (j < 1 || j > m) throw IndexError("color index " + std::to_string(j) + " outside 1.." + std::to_string(m));
  int acc = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    acc += k[i];
    if (j <= acc) return static_cast<int>(i) + 1;
  }
  throw InternalError("color_map fell through");
}

// A weight as coordinates over the fundamental weights.
using Weight = std::vector<Rational>;

inline Rational weight_pairing(const CartanDatum& g, const Weight& a, const Weight& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g.weight_form[i][j] * b[j];
  return s;
}

// (a_p, L) = d_p L_p.
inline Rational root_weight_pairing(const CartanDatum& g, int p, const Weight& w) {
  auto i = static_cast<std::size_t>(p - 1);
  return g.d[i] * w[i];
}

// "w1", "2w1+w3", "1/2w2", "0".
inline Weight parse_weight(const CartanDatum& g, std::string_view text) {
  Weight out(static_cast<std::size_t>(g.rank), Rational(0));
  std::string s(text);
  if (s == "0") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t plus = s.find('+', pos);
    std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    std::size_t w = term.find('w');
    if (w == std::string::npos) throw ParseError("weight term '" + term + "' lacks a wN factor");
    std::string cs = term.substr(0, w);
    if (!cs.empty() && cs.back() == '*') cs.pop_back();
    Rational coeff = cs.empty() ? Rational(1) : (cs == "-" ? Rational(-1) : parse_rational(cs));
    std::string idx = term.substr(w + 1);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos || idx.size() > 3)
      throw ParseError("bad fundamental weight index in '" + term + "'");
    int i = std::stoi(idx);
    if (i < 1 || i > g.rank) throw IndexError("fundamental weight w" + idx + " outside rank " + std::to_string(g.rank));
    out[static_cast<std::size_t>(i - 1)] += coeff;
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

struct LocalSystemSpec {
  CartanDatum algebra;
  int n = 0;
  std::vector<Weight> weights;  // L_1..L_n
  std::vector<int> k;           // m = sum k
  Rational kappa = 0;
  RationalMatrix a;             // (n+m) x (n+m)

  int m() const {
    int s = 0;
    for (int x : k) s += x;
    return s;
  }
};

// a_ij = kappa K(L_i, L_j) for i, j <= n; -kappa K(a_pi(i-n), L_j) for
// i > n >= j; kappa K(a_pi(i-n), a_pi(j-n)) for i, j > n.
inline RationalMatrix exponents(const CartanDatum& g, const std::vector<Weight>& weights, const std::vector<int>& k,
                                Rational kappa) {
  for (const auto& w : weights)
    if (static_cast<int>(w.size()) != g.rank) throw ShapeError("weight length does not match the rank");
  if (static_cast<int>(k.size()) != g.rank) throw ShapeError("k-vector length does not match the rank");
  int m = 0;
  for (int x : k) {
    if (x < 0) throw IndexError("k-vector entries must be nonnegative");
    m += x;
  }
  const int n = static_cast<int>(weights.size());
  const auto total = static_cast<std::size_t>(n + m);
  RationalMatrix a(total, std::vector<Rational>(total, Rational(0)));
  for (int i = 1; i <= n + m; ++i)
    for (int j = 1; j <= n + m; ++j) {
      Rational v;
      if (i <= n && j <= n) {
        v = weight_pairing(g, weights[i - 1], weights[j - 1]);
      } else if (i > n && j > n) {
        v = g.root_form[color_map(i - n, k) - 1][color_map(j - n, k) - 1];
      } else {
        int root = i > n ? color_map(i - n, k) : color_map(j - n, k);
        const Weight& w = i > n ? weights[j - 1] : weights[i - 1];
        v = -root_weight_pairing(g, root, w);
      }
      a[i - 1][j - 1] = kappa * v;
    }
  return a;
}

inline LocalSystemSpec make_local_system(const CartanDatum& g, std::vector<Weight> weights, std::vector<int> k,
                                         Rational kappa) {
  LocalSystemSpec out{g, static_cast<int>(weights.size()), std::move(weights), std::move(k), kappa, {}};
  out.a = exponents(out.algebra, out.weights, out.k, kappa);
  return out;
}

// The common exponent of q assigned to every f_j: a_{j,n+1}. Needs equal
// weights (the local system is then symmetric in the punctures) and one
// fiber point.
inline Rational local_t_exponent(const LocalSystemSpec& ls) {
  if (ls.m() != 1) throw ShapeError("local specialization needs m = 1, got m = " + std::to_string(ls.m()));
  for (const auto& w : ls.weights)
    if (w != ls.weights.front()) throw ShapeError("local specialization needs equal weights");
  return ls.a[0][static_cast<std::size_t>(ls.n)];
}

// f_j |-> q^{a_{j,n+1}}, tau_i |-> q^{u_exponent}.
inline SpecializedFamily specialize_local(const BurauFamily& fam, const LocalSystemSpec& ls, Rational u_exponent = 0) {
  if (ls.n != fam.n) throw MixedGroupError("local system and family have different n");
  return specialize_family(fam, local_t_exponent(ls), u_exponent);
}

}  // namespace braidburau
