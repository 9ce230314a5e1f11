#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidburau/error.hpp"
#include "braidburau/laurent.hpp"
#include "braidburau/rational.hpp"

namespace braidburau {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in z with big-integer coefficients, lowest degree first.
// No trailing zeros; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(BigInt c) {  // NOLINT: constants embed
    if (c != 0) c_.push_back(std::move(c));
  }
  Poly(int c) : Poly(BigInt(c)) {}  // NOLINT
  explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(std::size_t degree, BigInt coeff = 1) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const BigInt& lead() const { return c_.back(); }

  // Power of z dividing the polynomial.
  std::size_t low_degree() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
  }
  Poly shift_down(std::size_t k) const {
    if (k == 0) return *this;
    return Poly(std::vector<BigInt>(c_.begin() + static_cast<long>(std::min(k, c_.size())), c_.end()));
  }
  Poly shift_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> c(k);
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    return g;
  }
  Poly divide_scalar(const BigInt& s) const {
    std::vector<BigInt> c = c_;
    for (auto& x : c) {
      if (x % s != 0) throw InternalError("inexact scalar division of polynomial");
      x /= s;
    }
    return Poly(std::move(c));
  }
  Poly scale(const BigInt& s) const {
    std::vector<BigInt> c = c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
  }
  Poly primitive() const {
    if (is_zero()) return *this;
    BigInt g = content();
    if (lead() < 0) g = -g;
    return divide_scalar(g);
  }

  Poly operator-() const { return scale(-1); }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  bool operator==(const Poly&) const = default;

  // Pseudo-remainder: lead(b)^k a = q b + r with deg r < deg b.
  friend Poly pseudo_remainder(Poly a, const Poly& b) {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
      auto shift = static_cast<std::size_t>(a.degree() - b.degree());
      Poly t = b.scale(a.lead()).shift_up(shift);
      a = a.scale(b.lead()) - t;
    }
    return a;
  }

  // Exact quotient; throws when b does not divide a over Z.
  friend Poly exact_divide(Poly a, const Poly& b) {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    if (a.is_zero()) return {};
    std::vector<BigInt> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1);
    while (!a.is_zero() && a.degree() >= b.degree()) {
      if (a.lead() % b.lead() != 0) throw InternalError("inexact polynomial division");
      BigInt f = a.lead() / b.lead();
      auto shift = static_cast<std::size_t>(a.degree() - b.degree());
      q[shift] = f;
      a -= b.scale(f).shift_up(shift);
    }
    if (!a.is_zero()) throw InternalError("inexact polynomial division");
    return Poly(std::move(q));
  }

  // Primitive gcd with positive leading coefficient (Euclid on primitive parts).
  friend Poly gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
      Poly r = pseudo_remainder(a, b);
      a = std::move(b);
      b = r.primitive();
    }
    return a.primitive().scale(cont);
  }

  std::string to_string(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const BigInt& c = c_[k];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (k == 0 || mag != 1) out += mag.str();
      if (k > 0) {
        if (mag != 1) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// Element of Q(z), z = q^(1/D). Normal form: num and den coprime over Z[z]
// with no common content, den with positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(Poly(c)) {}         // NOLINT
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  // num * z^-k
  static RationalFunction with_shift(Poly num, std::size_t k) { return {std::move(num), Poly::monomial(k)}; }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  RationalFunction operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DegeneracyError("division by zero in the fraction field");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  bool operator==(const RationalFunction&) const = default;

  std::string to_string(const std::string& var = "z") const {
    if (den_ == Poly(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DegeneracyError("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    Poly g = gcd(num_, den_);
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
    if (den_.lead() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Poly num_;
  Poly den_;
};

// Embedding of RationalLaurent into Q(z) with q = z^D. Exponents whose
// denominators do not divide D are rejected.
inline RationalFunction to_fraction(const RationalLaurent& x, std::int64_t D) {
  if (x.is_zero()) return {};
  std::int64_t low = 0;
  bool first = true;
  std::vector<std::pair<std::int64_t, std::int64_t>> scaled;
  for (const auto& [e, c] : x.terms()) {
    Rational s = e * Rational(D);
    if (s.denominator() != 1) throw ShapeError("exponent " + to_string(e) + " not a multiple of 1/" + std::to_string(D));
    scaled.emplace_back(s.numerator(), c);
    low = first ? s.numerator() : std::min(low, s.numerator());
    first = false;
  }
  std::vector<BigInt> c(static_cast<std::size_t>(scaled.back().first - low + 1));
  for (const auto& [k, v] : scaled) c[static_cast<std::size_t>(k - low)] += v;
  Poly p(std::move(c));
  if (low >= 0) return p.shift_up(static_cast<std::size_t>(low));
  return RationalFunction::with_shift(p, static_cast<std::size_t>(-low));
}

// sum_k c_k z^(k + shift) read back as a Laurent polynomial in q = z^D.
inline RationalLaurent poly_to_laurent(const Poly& p, std::int64_t D, std::int64_t shift = 0) {
  RationalLaurent out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const BigInt& c = p.coeffs()[k];
    if (c == 0) continue;
    if (c > INT64_MAX || c < INT64_MIN) throw ResourceError("coefficient exceeds 64 bits");
    out += RationalLaurent::monomial(Rational(static_cast<std::int64_t>(k) + shift, D), static_cast<std::int64_t>(c));
  }
  return out;
}

using FractionMatrix = Matrix<RationalFunction>;

}  // namespace braidburau
