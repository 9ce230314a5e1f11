#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "braidburau/burau.hpp"
#include "braidburau/homology.hpp"
#include "braidburau/json.hpp"
#include "braidburau/laurent.hpp"

namespace braidburau {

struct Fixture {
  std::string name;
  std::string kind;  // "r-matrix", "classical-burau", "burau-family"
  std::string description;
  Json content;

  // 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
  std::string hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : content.dump()) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

namespace detail {

inline LaurentMatrix laurent_rows(const std::vector<std::vector<RationalLaurent>>& rows) {
  return LaurentMatrix::from_rows(rows);
}

inline Fixture r_matrix_fixture(std::string name, std::string description, const LaurentMatrix& r, std::size_t d,
                                bool expected) {
  return {std::move(name), "r-matrix", std::move(description),
          Json{{"d", d}, {"expected", expected}, {"matrix", to_json(r)}}};
}

inline LaurentMatrix permutation_flip(std::size_t d) {
  LaurentMatrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i * d + j, j * d + i) = RationalLaurent(1);
  return p;
}

}  // namespace detail

// U_q(sl2) spin-1/2 check matrix in the basis e1e1, e1e2, e2e1, e2e2.
inline LaurentMatrix uq_sl2_r_matrix() {
  const RationalLaurent q = RationalLaurent::monomial(1), qi = RationalLaurent::monomial(-1), o = 1, z = 0;
  return detail::laurent_rows({{q, z, z, z}, {z, q - qi, o, z}, {z, o, z, z}, {z, z, z, q}});
}

// diag(1,2,3,4) with an extra 1 at (0,1).
inline LaurentMatrix broken_r_matrix() {
  LaurentMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = RationalLaurent(static_cast<std::int64_t>(i + 1));
  m(0, 1) = RationalLaurent(1);
  return m;
}

inline std::vector<Fixture> list_fixtures() {
  std::vector<Fixture> out;
  out.push_back(detail::r_matrix_fixture("uq-sl2", "U_q(sl2) spin-1/2 check R-matrix", uq_sl2_r_matrix(), 2, true));
  out.push_back(detail::r_matrix_fixture("ybe-broken", "diag(1,2,3,4) plus an entry at (0,1); violates YBE",
                                         broken_r_matrix(), 2, false));
  out.push_back(detail::r_matrix_fixture("flip-d2", "tensor flip on C^2 (x) C^2", detail::permutation_flip(2), 2, true));
  out.push_back(detail::r_matrix_fixture("flip-d3", "tensor flip on C^3 (x) C^3", detail::permutation_flip(3), 3, true));
  out.push_back(detail::r_matrix_fixture("identity-d2", "identity on C^2 (x) C^2",
                                         LaurentMatrix::identity(4, RationalLaurent(1)), 2, true));
  for (int n = 2; n <= 4; ++n) {
    Json gens = Json::array();
    for (int i = 1; i <= n - 1; ++i) gens.push_back(to_json(classical_reduced_burau(n, i)));
    out.push_back({"burau-classical-reduced-n" + std::to_string(n), "classical-burau",
                   "standard (n-1)-dimensional reduced Burau matrices of s1..s(n-1) in t (exponents of q = t)",
                   Json{{"n", n}, {"variable", "t"}, {"generators", gens}}});
  }
  for (BurauForm form : {BurauForm::kReduced, BurauForm::kUnreduced})
    for (int n = 2; n <= 4; ++n) {
      BurauFamily fam = burau_closed_form(n, form);
      Json gens = Json::array();
      for (const auto& g : fam.generators) gens.push_back(to_json(g));
      out.push_back({"burau-" + to_string(form) + "-n" + std::to_string(n), "burau-family",
                     "braid-valued " + to_string(form) + " family for B_" + std::to_string(n),
                     Json{{"n", n}, {"form", to_string(form)}, {"generators", gens}}});
    }
  return out;
}

inline Fixture find_fixture(const std::string& name) {
  for (auto& f : list_fixtures())
    if (f.name == name) return f;
  throw IndexError("unknown fixture '" + name + "'");
}

}  // namespace braidburau
