#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "braidburau/error.hpp"

namespace braidburau {

using Rational = boost::rational<std::int64_t>;

// Always "p/q", including integers ("2/1"), so JSON stays uniform.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Shorter form for human-readable text: "2", "-1/4".
inline std::string to_short_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return to_string(r);
}

inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(std::string(s), &pos);
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + std::string(text) + "'");
    }
    if (pos != s.size()) throw ParseError("bad rational '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace braidburau
