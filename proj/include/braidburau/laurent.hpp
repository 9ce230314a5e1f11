#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "braidburau/group_ring.hpp"
#include "braidburau/rational.hpp"

namespace braidburau {

// Sum of c_r q^r with rational exponents r and integer coefficients. Also
// used for Z[t, t^-1] (integer exponents only).
class RationalLaurent {
 public:
  RationalLaurent() = default;
  RationalLaurent(std::int64_t c) {  // NOLINT: integers embed as constants
    if (c != 0) terms_[Rational(0)] = c;
  }

  static RationalLaurent monomial(Rational exponent, std::int64_t coeff = 1) {
    RationalLaurent out;
    if (coeff != 0) out.terms_[exponent] = coeff;
    return out;
  }

  const std::map<Rational, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Units of this ring are exactly the +-1 monomials.
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  std::int64_t coefficient(Rational exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t value_at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = detail::checked_add(s, c);
    return s;
  }

  // lcm of exponent denominators (1 if all exponents are integers).
  std::int64_t exponent_denominator() const {
    std::int64_t d = 1;
    for (const auto& [e, c] : terms_) d = std::lcm(d, e.denominator());
    return d;
  }

  RationalLaurent& operator+=(const RationalLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add(e, c);
    return *this;
  }
  RationalLaurent& operator-=(const RationalLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add(e, detail::checked_mul(c, -1));
    return *this;
  }
  RationalLaurent operator-() const { return RationalLaurent() - *this; }
  friend RationalLaurent operator+(RationalLaurent a, const RationalLaurent& b) { return a += b; }
  friend RationalLaurent operator-(RationalLaurent a, const RationalLaurent& b) { return a -= b; }

  friend RationalLaurent operator*(const RationalLaurent& a, const RationalLaurent& b) {
    RationalLaurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, detail::checked_mul(ca, cb));
    return out;
  }
  RationalLaurent& operator*=(const RationalLaurent& rhs) { return *this = *this * rhs; }

  bool operator==(const RationalLaurent&) const = default;

  // Substitute var -> var^s (scales every exponent).
  RationalLaurent scale_exponents(Rational s) const {
    RationalLaurent out;
    for (const auto& [e, c] : terms_) out.add(e * s, c);
    return out;
  }

  // "1 - t", "q^(1/2) - q^(-1/2)", "0".
  std::string to_string(char var = 'q') const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest power first reads like the usual polynomial notation.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::int64_t mag = c < 0 ? -c : c;
      if (e == Rational(0)) {
        out += std::to_string(mag);
      } else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += var;
        if (e != Rational(1)) {
          if (e.denominator() == 1 && e > Rational(0))
            out += "^" + std::to_string(e.numerator());
          else
            out += "^(" + to_short_string(e) + ")";
        }
      }
      first = false;
    }
    return out;
  }

 private:
  void add(Rational e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second = detail::checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Rational, std::int64_t> terms_;
};

using LaurentMatrix = Matrix<RationalLaurent>;

}  // namespace braidburau
