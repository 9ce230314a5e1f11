#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "braidburau/error.hpp"

namespace braidburau {

// One letter g^sign of a free group word.
struct Letter {
  int gen = 1;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }
  auto operator<=>(const Letter&) const = default;
};

// Freely reduced word in the generators x_1, x_2, ...; the empty word is the
// identity. The same type carries free-group elements (prefix 'f') and braid
// words in the Artin generators (prefix 's').
class FreeWord {
 public:
  FreeWord() = default;

  // Reduces on construction, so every FreeWord value is in normal form.
  explicit FreeWord(std::vector<Letter> raw) : letters_(reduce(std::move(raw))) {}

  static FreeWord generator(int gen, int sign = 1) { return FreeWord({Letter{gen, sign}}); }

  static std::vector<Letter> reduce(std::vector<Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (const Letter& l : raw) {
      if (l.gen <= 0) throw IndexError("generator index must be positive, got " + std::to_string(l.gen));
      if (l.sign != 1 && l.sign != -1) throw IndexError("letter sign must be +1 or -1");
      if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    FreeWord w;
    w.letters_ = std::move(out);
    return w;
  }

  FreeWord operator*(const FreeWord& rhs) const {
    // Only the seam between the two reduced words can cancel.
    std::size_t cancel = 0;
    while (cancel < letters_.size() && cancel < rhs.letters_.size() &&
           letters_[letters_.size() - 1 - cancel] == rhs.letters_[cancel].inverse()) {
      ++cancel;
    }
    FreeWord w;
    w.letters_.reserve(letters_.size() + rhs.letters_.size() - 2 * cancel);
    w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end() - static_cast<std::ptrdiff_t>(cancel));
    w.letters_.insert(w.letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), rhs.letters_.end());
    return w;
  }

  FreeWord& operator*=(const FreeWord& rhs) { return *this = *this * rhs; }

  FreeWord pow(int k) const {
    FreeWord base = k < 0 ? inverse() : *this;
    FreeWord out;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
    return out;
  }

  int exponent_sum(int gen) const {
    int s = 0;
    for (const Letter& l : letters_)
      if (l.gen == gen) s += l.sign;
    return s;
  }

  int total_exponent() const {
    int s = 0;
    for (const Letter& l : letters_) s += l.sign;
    return s;
  }

  int max_generator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
  }

  auto operator<=>(const FreeWord&) const = default;

  // "f1 f2^-1 f1", identity prints as "1".
  std::string to_string(char prefix = 'f') const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ' ';
      out += prefix;
      out += std::to_string(letters_[i].gen);
      if (letters_[i].sign < 0) out += "^-1";
    }
    return out;
  }

  // Accepts "f1 f2^-1", "f1^3", and "1" for the identity.
  static FreeWord parse(std::string_view text, char prefix = 'f') {
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<Letter> raw;
    while (in >> tok) {
      if (tok == "1") continue;
      if (tok.size() < 2 || tok[0] != prefix)
        throw ParseError("bad letter '" + tok + "' (expected " + std::string(1, prefix) + "<k>[^e])");
      auto caret = tok.find('^');
      std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
      int gen = parse_small_int(idx, tok);
      int exp = 1;
      if (caret != std::string::npos) exp = parse_small_int(tok.substr(caret + 1), tok);
      if (gen <= 0) throw ParseError("generator index must be positive in '" + tok + "'");
      int sign = exp < 0 ? -1 : 1;
      for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) raw.push_back({gen, sign});
    }
    return FreeWord(std::move(raw));
  }

 private:
  static int parse_small_int(const std::string& s, const std::string& tok) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + tok + "'");
    }
    if (pos != s.size()) throw ParseError("bad letter '" + tok + "'");
    return v;
  }

  std::vector<Letter> letters_;
};

// reduce_word: the unique freely reduced representative.
inline FreeWord reduce_word(std::vector<Letter> raw) { return FreeWord(std::move(raw)); }

}  // namespace braidburau
