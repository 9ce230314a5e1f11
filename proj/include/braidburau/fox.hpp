#pragma once

#include <map>
#include <string>

#include "braidburau/cell_complex.hpp"
#include "braidburau/group_ring.hpp"

namespace braidburau {

// Formal Z[F_n]-combination of 1-cell symbols [s]: a 1-chain of the
// universal cover, left module over Z[F_n].
class ChainElement {
 public:
  ChainElement() = default;

  static ChainElement cell(Cell c, FreeRing coeff = free_one()) {
    ChainElement out;
    out.add(c, coeff);
    return out;
  }

  const std::map<Cell, FreeRing>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FreeRing coefficient(Cell c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? FreeRing{} : it->second;
  }

  void add(Cell c, const FreeRing& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(c, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  ChainElement& operator+=(const ChainElement& rhs) {
    for (const auto& [c, x] : rhs.terms_) add(c, x);
    return *this;
  }
  ChainElement& operator-=(const ChainElement& rhs) {
    for (const auto& [c, x] : rhs.terms_) add(c, -x);
    return *this;
  }
  friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
  friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }

  // Left multiplication by a ring element.
  friend ChainElement operator*(const FreeRing& r, const ChainElement& ch) {
    ChainElement out;
    for (const auto& [c, x] : ch.terms_) out.add(c, r * x);
    return out;
  }

  bool operator==(const ChainElement&) const = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, x] : terms_) {
      if (!first) out += " + ";
      out += "(" + x.to_string() + ")[" + c.to_string() + "]";
      first = false;
    }
    return out;
  }

 private:
  std::map<Cell, FreeRing> terms_;
};

// Groupoid Fox derivation:
//   delta(s) = [s],  delta(g g') = delta(g) + (gamma_x g gamma_y^-1) delta(g'),
// hence delta(id) = 0 and delta(g^-1) = -(gamma_y g^-1 gamma_x^-1) delta(g).
// The running coefficient gamma_x (prefix) gamma_y^-1 is tracked as a word.
inline ChainElement fox_derive(const GroupoidPath& p) {
  ChainElement out;
  FreeWord prefix;
  for (const Edge& e : p.edges()) {
    FreeWord step = e.cell.kind == CellKind::kLPlus ? FreeWord::generator(e.cell.index) : FreeWord{};
    if (e.orientation > 0) {
      out.add(e.cell, FreeRing(prefix));
      prefix *= step;
    } else {
      prefix *= step.inverse();
      out.add(e.cell, -FreeRing(prefix));
    }
  }
  return out;
}

}  // namespace braidburau
