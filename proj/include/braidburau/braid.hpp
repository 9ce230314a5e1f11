#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidburau/error.hpp"
#include "braidburau/free_word.hpp"

namespace braidburau {

// Image words above this length abort comparison with a ResourceError.
inline constexpr std::size_t kMaxWordLength = 10000;

// Element of B_n given by a word in sigma_1..sigma_{n-1} (printed s1..).
// Equality is group-theoretic; see braid_equal.
class Braid {
 public:
  explicit Braid(int n, FreeWord word = {}) : n_(n), word_(std::move(word)) {
    if (n < 1) throw IndexError("braid strand count must be positive");
    if (word_.max_generator() > n - 1)
      throw IndexError("braid generator s" + std::to_string(word_.max_generator()) + " out of range for n=" +
                       std::to_string(n));
  }

  static Braid identity(int n) { return Braid(n); }
  static Braid generator(int n, int i, int sign = 1) {
    if (i < 1 || i > n - 1) throw IndexError("braid generator index " + std::to_string(i) + " out of range");
    return Braid(n, FreeWord::generator(i, sign));
  }
  static Braid parse(int n, std::string_view text) { return Braid(n, FreeWord::parse(text, 's')); }

  int strands() const { return n_; }
  const FreeWord& word() const { return word_; }
  Braid inverse() const { return Braid(n_, word_.inverse()); }

  Braid operator*(const Braid& rhs) const {
    if (n_ != rhs.n_) throw MixedGroupError("braids on different strand counts");
    return Braid(n_, word_ * rhs.word_);
  }

  std::string to_string() const { return word_.to_string('s'); }

  // Induced permutation (0-based images of strand positions).
  std::vector<int> permutation() const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    std::iota(perm.begin(), perm.end(), 0);
    for (const Letter& l : word_.letters()) std::swap(perm[l.gen - 1], perm[l.gen]);
    return perm;
  }

  bool is_pure() const {
    auto p = permutation();
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != static_cast<int>(k)) return false;
    return true;
  }

 private:
  int n_;
  FreeWord word_;
};

// Automorphism of F_n stored by the images of f_1..f_n.
class FreeAutomorphism {
 public:
  explicit FreeAutomorphism(int n) : images_(static_cast<std::size_t>(n)) {
    for (int j = 1; j <= n; ++j) images_[j - 1] = FreeWord::generator(j);
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }

  FreeWord apply(const FreeWord& w) const {
    FreeWord out;
    for (const Letter& l : w.letters()) {
      if (l.gen > rank()) throw IndexError("free generator f" + std::to_string(l.gen) + " out of range");
      out *= l.sign > 0 ? image(l.gen) : image(l.gen).inverse();
      if (out.length() > kMaxWordLength) throw ResourceError("free word exceeded length cap");
    }
    return out;
  }

  // Artin generator tau_i^sign:
  //   tau_i:    f_i -> f_i f_{i+1} f_i^-1,  f_{i+1} -> f_i
  //   tau_i^-1: f_i -> f_{i+1},             f_{i+1} -> f_{i+1}^-1 f_i f_{i+1}
  static FreeAutomorphism artin_generator(int n, int i, int sign) {
    if (i < 1 || i > n - 1) throw IndexError("braid generator index " + std::to_string(i) + " out of range");
    FreeAutomorphism a(n);
    FreeWord fi = FreeWord::generator(i), fi1 = FreeWord::generator(i + 1);
    if (sign > 0) {
      a.images_[i - 1] = fi * fi1 * fi.inverse();
      a.images_[i] = fi;
    } else {
      a.images_[i - 1] = fi1;
      a.images_[i] = fi1.inverse() * fi * fi1;
    }
    return a;
  }

  // (this then next): x -> next(this(x)).
  FreeAutomorphism then(const FreeAutomorphism& next) const {
    FreeAutomorphism out(rank());
    for (std::size_t j = 0; j < images_.size(); ++j) out.images_[j] = next.apply(images_[j]);
    return out;
  }

  bool operator==(const FreeAutomorphism&) const = default;

  std::string key() const {
    std::string out;
    for (const FreeWord& w : images_) {
      out += w.to_string();
      out += ';';
    }
    return out;
  }

 private:
  std::vector<FreeWord> images_;
};

// Artin action of a braid word, as a right action: the letters of b act in
// reading order, so act(b b') = act(b') o act(b). This is the side under
// which sigma_i^-1 A_{j,n+1} sigma_i = A(tau_i(f_j)) holds in B_{n+1}.
inline FreeAutomorphism artin_automorphism(const Braid& b) {
  FreeAutomorphism a(b.strands());
  for (const Letter& l : b.word().letters()) {
    a = a.then(FreeAutomorphism::artin_generator(b.strands(), l.gen, l.sign));
  }
  return a;
}

inline FreeWord artin_act(const Braid& b, const FreeWord& w) {
  if (w.max_generator() > b.strands())
    throw IndexError("free generator f" + std::to_string(w.max_generator()) + " out of range for n=" +
                     std::to_string(b.strands()));
  return artin_automorphism(b).apply(w);
}

// Complete decision procedure: the Artin action is faithful.
inline bool braid_equal(const Braid& a, const Braid& b) {
  if (a.strands() != b.strands()) throw MixedGroupError("braid_equal: strand counts differ");
  return artin_automorphism(a) == artin_automorphism(b);
}

// Band generator A_{i,j} = (s_{j-1} .. s_{i+1}) s_i^2 (s_{i+1}^-1 .. s_{j-1}^-1);
// strand j encircles strand i once. Symmetric in (i, j).
inline Braid pure_braid_gen(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j)
    throw IndexError("pure braid generator indices (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range for n=" + std::to_string(n));
  std::vector<Letter> raw;
  for (int k = j - 1; k > i; --k) raw.push_back({k, 1});
  raw.push_back({i, 1});
  raw.push_back({i, 1});
  for (int k = i + 1; k <= j - 1; ++k) raw.push_back({k, -1});
  return Braid(n, FreeWord(std::move(raw)));
}

// Element (b, u) of B_n |x F_n with (b,u)(b',u') = (b b', act(b')(u) u').
class SemidirectElement {
 public:
  explicit SemidirectElement(Braid braid, FreeWord free = {}) : braid_(std::move(braid)), free_(std::move(free)) {
    if (free_.max_generator() > braid_.strands())
      throw IndexError("free part uses f" + std::to_string(free_.max_generator()) + " beyond n");
  }

  static SemidirectElement identity(int n) { return SemidirectElement(Braid::identity(n)); }

  const Braid& braid() const { return braid_; }
  const FreeWord& free() const { return free_; }
  int strands() const { return braid_.strands(); }

  SemidirectElement operator*(const SemidirectElement& rhs) const {
    if (strands() != rhs.strands()) throw MixedGroupError("semidirect elements over different n");
    return SemidirectElement(braid_ * rhs.braid_, artin_act(rhs.braid_, free_) * rhs.free_);
  }

  SemidirectElement inverse() const {
    Braid binv = braid_.inverse();
    return SemidirectElement(binv, artin_act(binv, free_.inverse()));
  }

  // Canonical key: Artin images of the braid part plus the reduced free part.
  std::string key() const { return artin_automorphism(braid_).key() + "|" + free_.to_string(); }

  bool operator==(const SemidirectElement& rhs) const {
    return strands() == rhs.strands() && free_ == rhs.free_ && braid_equal(braid_, rhs.braid_);
  }

  std::string to_string() const {
    if (braid_.word().is_identity()) return free_.to_string();
    if (free_.is_identity()) return "(" + braid_.to_string() + ")";
    return "(" + braid_.to_string() + ")" + free_.to_string();
  }

 private:
  Braid braid_;
  FreeWord free_;
};

// B_n |x F_n -> B_{n+1}: tau_i -> sigma_i, f_j -> A_{j,n+1}.
inline Braid embed_semidirect(const SemidirectElement& x) {
  int n = x.strands();
  std::vector<Letter> raw = x.braid().word().letters();
  for (const Letter& l : x.free().letters()) {
    const FreeWord a = pure_braid_gen(l.gen, n + 1, n + 1).word();
    const FreeWord piece = l.sign > 0 ? a : a.inverse();
    raw.insert(raw.end(), piece.letters().begin(), piece.letters().end());
  }
  return Braid(n + 1, FreeWord(std::move(raw)));
}

}  // namespace braidburau
