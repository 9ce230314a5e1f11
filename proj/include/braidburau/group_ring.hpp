#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidburau/braid.hpp"
#include "braidburau/error.hpp"
#include "braidburau/free_word.hpp"

namespace braidburau {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer coefficient overflow");
  return r;
}

}  // namespace detail

// What RingElement needs from a group: a canonical key (equal keys iff equal
// group elements), a size for picking short representatives, and a
// compatibility check for "same underlying group".
template <class G>
struct GroupTraits;

template <>
struct GroupTraits<FreeWord> {
  static std::string key(const FreeWord& g) { return g.to_string(); }
  static std::string print(const FreeWord& g) { return g.to_string(); }
  static std::size_t size(const FreeWord& g) { return g.length(); }
  static void check_compatible(const FreeWord&, const FreeWord&) {}
};

template <>
struct GroupTraits<Braid> {
  static std::string key(const Braid& g) { return artin_automorphism(g).key(); }
  static std::string print(const Braid& g) { return "(" + g.to_string() + ")"; }
  static std::size_t size(const Braid& g) { return g.word().length(); }
  static void check_compatible(const Braid& a, const Braid& b) {
    if (a.strands() != b.strands()) throw MixedGroupError("group ring elements over B_n for different n");
  }
};

template <>
struct GroupTraits<SemidirectElement> {
  static std::string key(const SemidirectElement& g) { return g.key(); }
  static std::string print(const SemidirectElement& g) { return g.to_string(); }
  static std::size_t size(const SemidirectElement& g) { return g.braid().word().length() + g.free().length(); }
  static void check_compatible(const SemidirectElement& a, const SemidirectElement& b) {
    if (a.strands() != b.strands()) throw MixedGroupError("semidirect group ring elements for different n");
  }
};

// Finite integer combination of group elements. Terms are keyed by the
// canonical key, so iteration (and printing) order is lexicographic in it.
template <class G>
class RingElement {
 public:
  using Traits = GroupTraits<G>;

  struct Term {
    G element;
    std::int64_t coeff;
  };

  RingElement() = default;
  RingElement(const G& g, std::int64_t coeff = 1) { add_term(g, coeff); }  // NOLINT: implicit lift is intended

  static RingElement zero() { return {}; }

  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const G& g, std::int64_t coeff) {
    if (coeff == 0) return;
    if (!terms_.empty()) Traits::check_compatible(terms_.begin()->second.element, g);
    std::string k = Traits::key(g);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), Term{g, coeff});
      return;
    }
    it->second.coeff = detail::checked_add(it->second.coeff, coeff);
    if (it->second.coeff == 0) {
      terms_.erase(it);
      return;
    }
    // Keep the shortest representative (then the smallest printed one) so
    // the result is independent of summation order.
    auto sz_new = Traits::size(g), sz_old = Traits::size(it->second.element);
    if (sz_new < sz_old || (sz_new == sz_old && Traits::print(g) < Traits::print(it->second.element)))
      it->second.element = g;
  }

  std::int64_t coefficient(const G& g) const {
    auto it = terms_.find(Traits::key(g));
    return it == terms_.end() ? 0 : it->second.coeff;
  }

  RingElement operator-() const {
    RingElement out = *this;
    for (auto& [k, t] : out.terms_) t.coeff = detail::checked_mul(t.coeff, -1);
    return out;
  }

  RingElement& operator+=(const RingElement& rhs) {
    for (const auto& [k, t] : rhs.terms_) add_term(t.element, t.coeff);
    return *this;
  }
  RingElement& operator-=(const RingElement& rhs) {
    for (const auto& [k, t] : rhs.terms_) add_term(t.element, detail::checked_mul(t.coeff, -1));
    return *this;
  }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }

  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement out;
    for (const auto& [ka, ta] : a.terms_)
      for (const auto& [kb, tb] : b.terms_) {
        Traits::check_compatible(ta.element, tb.element);
        out.add_term(ta.element * tb.element, detail::checked_mul(ta.coeff, tb.coeff));
      }
    return out;
  }
  RingElement& operator*=(const RingElement& rhs) { return *this = *this * rhs; }

  friend RingElement operator*(std::int64_t s, const RingElement& a) {
    RingElement out;
    for (const auto& [k, t] : a.terms_) out.add_term(t.element, detail::checked_mul(s, t.coeff));
    return out;
  }

  bool operator==(const RingElement& rhs) const {
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = rhs.terms_.begin();
    for (const auto& [k, t] : terms_) {
      if (k != it->first || t.coeff != it->second.coeff) return false;
      ++it;
    }
    return true;
  }

  // Push every group element through a map (a group homomorphism in all
  // uses here) and collect.
  template <class F>
  auto map_elements(F&& f) const {
    using H = std::decay_t<decltype(f(std::declval<const G&>()))>;
    RingElement<H> out;
    for (const auto& [k, t] : terms_) out.add_term(f(t.element), t.coeff);
    return out;
  }

  // "1 - f1 f2 f1^-1"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, t] : terms_) {
      std::int64_t c = t.coeff;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::int64_t mag = c < 0 ? -c : c;
      std::string g = Traits::print(t.element);
      if (g == "1") {
        out += std::to_string(mag);
      } else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += g;
      }
      first = false;
    }
    return out;
  }

 private:
  std::map<std::string, Term> terms_;
};

using FreeRing = RingElement<FreeWord>;
using BraidRing = RingElement<Braid>;
using SemidirectRing = RingElement<SemidirectElement>;

inline FreeRing free_one() { return FreeRing(FreeWord{}); }
inline FreeRing free_gen(int j, int sign = 1) { return FreeRing(FreeWord::generator(j, sign)); }

// The Artin action on each group element of an entry (a ring automorphism).
inline FreeRing apply_braid(const Braid& b, const FreeRing& x) {
  if (x.is_zero() || b.word().is_identity()) return x;
  FreeAutomorphism a = artin_automorphism(b);
  return x.map_elements([&](const FreeWord& w) { return a.apply(w); });
}

}  // namespace braidburau
