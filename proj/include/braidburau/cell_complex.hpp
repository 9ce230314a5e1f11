#pragma once

#include <compare>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "braidburau/error.hpp"
#include "braidburau/free_word.hpp"

namespace braidburau {

// A 0-cell k + side*eps. The base point P is 0+eps. eps is a label only.
struct Object {
  int point = 0;
  int side = 1;

  static Object base() { return {0, 1}; }
  bool is_base() const { return point == 0 && side == 1; }
  auto operator<=>(const Object&) const = default;

  std::string to_string() const { return std::to_string(point) + (side > 0 ? "+e" : "-e"); }

  // "0+e", "3-e"; "P" is accepted for the base point.
  static Object parse(std::string_view text) {
    std::string s(text);
    if (s == "P") return base();
    if (s.size() < 3 || s.substr(s.size() - 1) != "e" || (s[s.size() - 2] != '+' && s[s.size() - 2] != '-'))
      throw ParseError("bad object name '" + s + "'");
    std::string digits = s.substr(0, s.size() - 2);
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad object name '" + s + "'");
    return {std::stoi(digits), s[s.size() - 2] == '+' ? 1 : -1};
  }
};

enum class CellKind { kW, kLPlus, kLMinus };

// 1-cells: w_k (0 <= k < n) from k+eps to k+1-eps; l_i^+ from i-eps to i+eps
// (lower half circle); l_i^- from i+eps back to i-eps (upper half circle).
struct Cell {
  CellKind kind = CellKind::kW;
  int index = 0;

  static Cell w(int k) { return {CellKind::kW, k}; }
  static Cell l_plus(int i) { return {CellKind::kLPlus, i}; }
  static Cell l_minus(int i) { return {CellKind::kLMinus, i}; }

  Object source() const {
    switch (kind) {
      case CellKind::kW: return {index, 1};
      case CellKind::kLPlus: return {index, -1};
      case CellKind::kLMinus: return {index, 1};
    }
    return {};
  }
  Object target() const {
    switch (kind) {
      case CellKind::kW: return {index + 1, -1};
      case CellKind::kLPlus: return {index, 1};
      case CellKind::kLMinus: return {index, -1};
    }
    return {};
  }

  auto operator<=>(const Cell&) const = default;

  // Fixed ASCII names: w0, L1p, L1m.
  std::string to_string() const {
    switch (kind) {
      case CellKind::kW: return "w" + std::to_string(index);
      case CellKind::kLPlus: return "L" + std::to_string(index) + "p";
      case CellKind::kLMinus: return "L" + std::to_string(index) + "m";
    }
    return {};
  }

  static Cell parse(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return ParseError("bad cell name '" + s + "'"); };
    if (s.size() < 2) throw bad();
    auto number = [&](std::string_view digits) {
      if (digits.empty()) throw bad();
      for (char c : digits)
        if (c < '0' || c > '9') throw bad();
      return std::stoi(std::string(digits));
    };
    if (s[0] == 'w') return w(number(std::string_view(s).substr(1)));
    if (s[0] == 'L' && s.size() >= 3) {
      char last = s.back();
      int idx = number(std::string_view(s).substr(1, s.size() - 2));
      if (last == 'p') return l_plus(idx);
      if (last == 'm') return l_minus(idx);
    }
    throw bad();
  }
};

// The punctured-plane complex with n punctures.
class CellComplexSpec {
 public:
  explicit CellComplexSpec(int n) : n_(n) {
    if (n < 1) throw IndexError("number of punctures must be positive");
  }

  int n() const { return n_; }

  bool contains(const Object& x) const {
    if (x.is_base()) return true;
    return x.point >= 1 && x.point <= n_ && (x.side == 1 || x.side == -1);
  }
  bool contains(const Cell& c) const {
    if (c.kind == CellKind::kW) return c.index >= 0 && c.index < n_;
    return c.index >= 1 && c.index <= n_;
  }

  // 0+eps, 1-eps, 1+eps, ..., n-eps, n+eps.
  std::vector<Object> objects() const {
    std::vector<Object> out{Object::base()};
    for (int k = 1; k <= n_; ++k) {
      out.push_back({k, -1});
      out.push_back({k, 1});
    }
    return out;
  }

  // w0..w(n-1), L1p, L1m, ..., Lnp, Lnm.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int k = 0; k < n_; ++k) out.push_back(Cell::w(k));
    for (int i = 1; i <= n_; ++i) {
      out.push_back(Cell::l_plus(i));
      out.push_back(Cell::l_minus(i));
    }
    return out;
  }

  std::size_t object_position(const Object& x) const {
    if (!contains(x)) throw IndexError("unknown object " + x.to_string());
    if (x.is_base()) return 0;
    return static_cast<std::size_t>(2 * x.point - (x.side < 0 ? 1 : 0));
  }
  std::size_t cell_position(const Cell& c) const {
    if (!contains(c)) throw IndexError("cell " + c.to_string() + " not in complex");
    if (c.kind == CellKind::kW) return static_cast<std::size_t>(c.index);
    return static_cast<std::size_t>(n_ + 2 * (c.index - 1) + (c.kind == CellKind::kLMinus ? 1 : 0));
  }

  bool operator==(const CellComplexSpec&) const = default;

 private:
  int n_;
};

struct Edge {
  Cell cell;
  int orientation = 1;

  Object source() const { return orientation > 0 ? cell.source() : cell.target(); }
  Object target() const { return orientation > 0 ? cell.target() : cell.source(); }
  Edge inverse() const { return {cell, -orientation}; }
  auto operator<=>(const Edge&) const = default;
};

// A reduced morphism of the free groupoid on the 1-cells. Always stored
// reduced, so equality is sequence comparison.
class GroupoidPath {
 public:
  static GroupoidPath identity(const CellComplexSpec& cx, Object at) {
    if (!cx.contains(at)) throw IndexError("unknown object " + at.to_string());
    return GroupoidPath(cx, at, at, {});
  }

  static GroupoidPath edge(const CellComplexSpec& cx, Cell c, int orientation = 1) {
    if (!cx.contains(c)) throw IndexError("cell " + c.to_string() + " not in complex");
    Edge e{c, orientation > 0 ? 1 : -1};
    return GroupoidPath(cx, e.source(), e.target(), {e});
  }

  // Validates composability of consecutive edges, then reduces.
  static GroupoidPath from_edges(const CellComplexSpec& cx, Object source, std::vector<Edge> edges) {
    if (!cx.contains(source)) throw IndexError("unknown object " + source.to_string());
    Object at = source;
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
      if (!cx.contains(e.cell)) throw IndexError("cell " + e.cell.to_string() + " not in complex");
      if (e.orientation != 1 && e.orientation != -1) throw IndexError("edge orientation must be +1 or -1");
      if (e.source() != at)
        throw CompositionError("edge " + e.cell.to_string() + " starts at " + e.source().to_string() +
                               ", path is at " + at.to_string());
      at = e.target();
      if (!out.empty() && out.back() == e.inverse()) {
        out.pop_back();
      } else {
        out.push_back(e);
      }
    }
    return GroupoidPath(cx, source, at, std::move(out));
  }

  const CellComplexSpec& complex() const { return complex_; }
  Object source() const { return source_; }
  Object target() const { return target_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_identity() const { return edges_.empty(); }
  bool is_closed_at_base() const { return source_.is_base() && target_.is_base(); }

  bool operator==(const GroupoidPath&) const = default;

  std::string to_string() const {
    if (edges_.empty()) return "id(" + source_.to_string() + ")";
    std::string out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i) out += ' ';
      out += edges_[i].cell.to_string();
      if (edges_[i].orientation < 0) out += "^-1";
    }
    return out;
  }

  // "w0 L1m^-1 w1"; "id" (or an empty string) is the identity at `source`.
  static GroupoidPath parse(const CellComplexSpec& cx, std::string_view text, Object source = Object::base()) {
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<Edge> edges;
    while (in >> tok) {
      if (tok == "id") continue;
      int orient = 1;
      std::string name = tok;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        std::string exp = tok.substr(caret + 1);
        if (exp != "-1" && exp != "1") throw ParseError("bad path letter '" + tok + "'");
        orient = exp == "-1" ? -1 : 1;
        name = tok.substr(0, caret);
      }
      edges.push_back({Cell::parse(name), orient});
    }
    if (!edges.empty()) source = edges.front().source();
    return from_edges(cx, source, std::move(edges));
  }

 private:
  GroupoidPath(const CellComplexSpec& cx, Object s, Object t, std::vector<Edge> edges)
      : complex_(cx), source_(s), target_(t), edges_(std::move(edges)) {}

  CellComplexSpec complex_;
  Object source_;
  Object target_;
  std::vector<Edge> edges_;
};

inline GroupoidPath compose_paths(const GroupoidPath& p, const GroupoidPath& q) {
  if (!(p.complex() == q.complex())) throw CompositionError("paths live in different complexes");
  if (p.target() != q.source())
    throw CompositionError("cannot compose: target " + p.target().to_string() + " != source " +
                           q.source().to_string());
  std::vector<Edge> edges = p.edges();
  edges.insert(edges.end(), q.edges().begin(), q.edges().end());
  return GroupoidPath::from_edges(p.complex(), p.source(), std::move(edges));
}

inline GroupoidPath invert_path(const GroupoidPath& p) {
  std::vector<Edge> edges;
  edges.reserve(p.edges().size());
  for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) edges.push_back(it->inverse());
  return GroupoidPath::from_edges(p.complex(), p.target(), std::move(edges));
}

// Spanning-tree path from P to x; the tree is every 1-cell except the l_j^+.
//   gamma_j^- = w0 (L1m)^-1 w1 ... w(j-1)       to j - eps
//   gamma_j^+ = gamma_j^- (Ljm)^-1              to j + eps
inline GroupoidPath base_path(const CellComplexSpec& cx, Object x) {
  if (!cx.contains(x)) throw IndexError("unknown object " + x.to_string());
  std::vector<Edge> edges;
  for (int k = 1; k <= x.point; ++k) {
    edges.push_back({Cell::w(k - 1), 1});
    if (k < x.point || x.side > 0) edges.push_back({Cell::l_minus(k), -1});
  }
  return GroupoidPath::from_edges(cx, Object::base(), std::move(edges));
}

// f_j = gamma_j (Ljp Ljm) gamma_j^-1, the loop around puncture j.
inline GroupoidPath loop_generator(const CellComplexSpec& cx, int j) {
  if (j < 1 || j > cx.n()) throw IndexError("loop index " + std::to_string(j) + " out of range 1.." + std::to_string(cx.n()));
  GroupoidPath gamma = base_path(cx, Object{j, -1});
  GroupoidPath circle = compose_paths(GroupoidPath::edge(cx, Cell::l_plus(j)), GroupoidPath::edge(cx, Cell::l_minus(j)));
  return compose_paths(compose_paths(gamma, circle), invert_path(gamma));
}

// The element gamma_x p gamma_y^-1 of pi_1(G, P) = F_n as a word in the f_j.
// Every tree edge contributes nothing and l_j^{+/-1} contributes f_j^{+/-1};
// this is the standard spanning-tree presentation.
inline FreeWord loop_word(const GroupoidPath& p) {
  std::vector<Letter> raw;
  for (const Edge& e : p.edges())
    if (e.cell.kind == CellKind::kLPlus) raw.push_back({e.cell.index, e.orientation});
  return FreeWord(std::move(raw));
}

// Closed path at P realizing a free word via the loop generators.
inline GroupoidPath path_of_free_word(const CellComplexSpec& cx, const FreeWord& w) {
  GroupoidPath out = GroupoidPath::identity(cx, Object::base());
  for (const Letter& l : w.letters()) {
    GroupoidPath g = loop_generator(cx, l.gen);
    out = compose_paths(out, l.sign > 0 ? g : invert_path(g));
  }
  return out;
}

}  // namespace braidburau
