#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "braidburau/braid.hpp"
#include "braidburau/error.hpp"
#include "braidburau/group_ring.hpp"
#include "braidburau/homology.hpp"
#include "braidburau/labeled_matrix.hpp"
#include "braidburau/laurent.hpp"
#include "braidburau/local_system.hpp"
#include "braidburau/polynomial.hpp"
#include "braidburau/rational.hpp"

// Serialization. Words are [[gen, sign], ...]; braids {"n": n, "word": w};
// ring elements [[coeff, w], ...]; rationals "p/q"; Laurent polynomials
// [[coeff, "p/q"], ...] meaning sum coeff q^(p/q).
namespace braidburau {

using Json = nlohmann::ordered_json;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError("malformed JSON: " + what);
}

inline std::int64_t get_int(const Json& j, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace detail

inline Json to_json(const Rational& r) { return to_string(r); }
inline Rational rational_from_json(const Json& j) {
  detail::require(j.is_string(), "rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

inline Json to_json(const FreeWord& w) {
  Json out = Json::array();
  for (const Letter& l : w.letters()) out.push_back({l.gen, l.sign});
  return out;
}
inline FreeWord word_from_json(const Json& j) {
  detail::require(j.is_array(), "word must be an array");
  std::vector<Letter> letters;
  for (const auto& x : j) {
    detail::require(x.is_array() && x.size() == 2, "letter must be [gen, sign]");
    letters.push_back({static_cast<int>(detail::get_int(x[0], "generator")), static_cast<int>(detail::get_int(x[1], "sign"))});
  }
  FreeWord w(std::move(letters));
  // Stored words must already be reduced.
  detail::require(w.length() == j.size(), "word is not freely reduced");
  return w;
}

inline Json to_json(const Braid& b) { return {{"n", b.strands()}, {"word", to_json(b.word())}}; }
inline Braid braid_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("n") && j.contains("word"), "braid needs n and word");
  return Braid(static_cast<int>(detail::get_int(j["n"], "n")), word_from_json(j["word"]));
}

inline Json to_json(const FreeRing& x) {
  Json out = Json::array();
  for (const auto& [k, t] : x.terms()) out.push_back({t.coeff, to_json(t.element)});
  return out;
}
inline FreeRing free_ring_from_json(const Json& j) {
  detail::require(j.is_array(), "ring element must be an array of terms");
  FreeRing out;
  for (const auto& t : j) {
    detail::require(t.is_array() && t.size() == 2, "term must be [coeff, word]");
    out += FreeRing(word_from_json(t[1]), detail::get_int(t[0], "coefficient"));
  }
  return out;
}

inline Json to_json(const LabeledMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.matrix(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"label", m.label ? to_json(*m.label) : Json(nullptr)},
          {"entries", std::move(entries)}};
}
inline LabeledMatrix labeled_matrix_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
                  "matrix needs rows, cols, entries");
  auto rows = static_cast<std::size_t>(detail::get_int(j["rows"], "rows"));
  auto cols = static_cast<std::size_t>(detail::get_int(j["cols"], "cols"));
  const Json& e = j["entries"];
  detail::require(e.is_array() && e.size() == rows, "entries must have `rows` rows");
  FreeMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    detail::require(e[r].is_array() && e[r].size() == cols, "each row must have `cols` entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = free_ring_from_json(e[r][c]);
  }
  std::optional<Braid> label;
  if (j.contains("label") && !j["label"].is_null()) label = braid_from_json(j["label"]);
  return {std::move(m), label};
}

inline Json to_json(const RationalLaurent& x) {
  Json out = Json::array();
  for (const auto& [e, c] : x.terms()) out.push_back({c, to_string(e)});
  return out;
}
inline RationalLaurent laurent_from_json(const Json& j) {
  detail::require(j.is_array(), "Laurent polynomial must be an array of terms");
  RationalLaurent out;
  for (const auto& t : j) {
    detail::require(t.is_array() && t.size() == 2, "term must be [coeff, \"p/q\"]");
    out += RationalLaurent::monomial(rational_from_json(t[1]), detail::get_int(t[0], "coefficient"));
  }
  return out;
}

inline Json to_json(const LaurentMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}
inline LaurentMatrix laurent_matrix_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
                  "matrix needs rows, cols, entries");
  auto rows = static_cast<std::size_t>(detail::get_int(j["rows"], "rows"));
  auto cols = static_cast<std::size_t>(detail::get_int(j["cols"], "cols"));
  const Json& e = j["entries"];
  detail::require(e.is_array() && e.size() == rows, "entries must have `rows` rows");
  LaurentMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    detail::require(e[r].is_array() && e[r].size() == cols, "each row must have `cols` entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = laurent_from_json(e[r][c]);
  }
  return m;
}

// Q(z) with z = q^(1/D): {"num": Laurent, "den": Laurent}, both in q.
inline Json fraction_to_json(const RationalFunction& x, std::int64_t D) {
  return {{"num", to_json(poly_to_laurent(x.num(), D))}, {"den", to_json(poly_to_laurent(x.den(), D))}};
}
inline RationalFunction fraction_from_json(const Json& j, std::int64_t D) {
  detail::require(j.is_object() && j.contains("num") && j.contains("den"), "fraction needs num and den");
  return to_fraction(laurent_from_json(j["num"]), D) / to_fraction(laurent_from_json(j["den"]), D);
}

inline Json fraction_matrix_to_json(const FractionMatrix& m, std::int64_t D) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(fraction_to_json(m(r, c), D));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}
inline FractionMatrix fraction_matrix_from_json(const Json& j, std::int64_t D) {
  detail::require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
                  "matrix needs rows, cols, entries");
  auto rows = static_cast<std::size_t>(detail::get_int(j["rows"], "rows"));
  auto cols = static_cast<std::size_t>(detail::get_int(j["cols"], "cols"));
  const Json& e = j["entries"];
  detail::require(e.is_array() && e.size() == rows, "entries must have `rows` rows");
  FractionMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    detail::require(e[r].is_array() && e[r].size() == cols, "each row must have `cols` entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = fraction_from_json(e[r][c], D);
  }
  return m;
}

inline Json characteristic_to_json(const std::vector<RationalFunction>& c, std::int64_t D) {
  Json out = Json::array();
  for (const auto& x : c) out.push_back(fraction_to_json(x, D));
  return out;
}

inline Json to_json(const RationalMatrix& a) {
  Json out = Json::array();
  for (const auto& row : a) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

inline Json to_json(const LocalSystemSpec& ls) {
  Json weights = Json::array();
  for (const auto& w : ls.weights) {
    Json v = Json::array();
    for (const auto& x : w) v.push_back(to_string(x));
    weights.push_back(std::move(v));
  }
  return {{"algebra", ls.algebra.name()}, {"n", ls.n},        {"m", ls.m()},          {"k", ls.k},
          {"kappa", to_string(ls.kappa)}, {"weights", weights}, {"exponents", to_json(ls.a)}};
}

inline Json to_json(const HomologyResult& h) {
  Json basis = Json::array();
  for (const auto& v : h.h1.basis) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_json(poly_to_laurent(x, h.denominator)));
    basis.push_back(std::move(row));
  }
  return {{"n", h.n},
          {"t_exponent", to_string(h.spec.t_exponent)},
          {"u_exponent", to_string(h.spec.u_exponent)},
          {"degenerate", h.degenerate},
          {"dim_h0", h.dim_h0},
          {"dim_h1", h.dim_h1},
          {"free_cols", h.h1.free_cols},
          {"h1_basis", std::move(basis)}};
}

}  // namespace braidburau
