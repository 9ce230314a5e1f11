#pragma once

#include <string>

#include "braidburau/error.hpp"
#include "braidburau/laurent.hpp"
#include "braidburau/matrix.hpp"

namespace braidburau {

struct YbeSides {
  LaurentMatrix r1;  // R ⊗ 1
  LaurentMatrix r2;  // 1 ⊗ R
};

inline YbeSides ybe_sides(const LaurentMatrix& r, std::size_t d) {
  if (d == 0 || r.rows() != d * d || r.cols() != d * d)
    throw ShapeError("YBE check needs a d^2 x d^2 matrix; got " + std::to_string(r.rows()) + "x" +
                     std::to_string(r.cols()) + " for d=" + std::to_string(d));
  LaurentMatrix id = LaurentMatrix::identity(d, RationalLaurent(1));
  return {kronecker(r, id), kronecker(id, r)};
}

// (R⊗1)(1⊗R)(R⊗1) == (1⊗R)(R⊗1)(1⊗R), exactly.
inline bool ybe_check(const LaurentMatrix& r, std::size_t d) {
  auto [a, b] = ybe_sides(r, d);
  return a * b * a == b * a * b;
}

}  // namespace braidburau
