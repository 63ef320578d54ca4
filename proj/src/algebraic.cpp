// SPDX-License-Identifier: Apache-2.0

#include "trinom/algebraic.hpp"

#include <ostream>

#include "trinom/errors.hpp"

namespace trinom {

AlgebraicQ3i AlgebraicQ3i::conjugate() const { return {one, sqrt3, -i, -i_sqrt3}; }

AlgebraicQ3i AlgebraicQ3i::operator-() const { return {-one, -sqrt3, -i, -i_sqrt3}; }

AlgebraicQ3i& AlgebraicQ3i::operator+=(const AlgebraicQ3i& rhs) {
  one += rhs.one;
  sqrt3 += rhs.sqrt3;
  i += rhs.i;
  i_sqrt3 += rhs.i_sqrt3;
  return *this;
}

AlgebraicQ3i& AlgebraicQ3i::operator-=(const AlgebraicQ3i& rhs) {
  one -= rhs.one;
  sqrt3 -= rhs.sqrt3;
  i -= rhs.i;
  i_sqrt3 -= rhs.i_sqrt3;
  return *this;
}

std::string AlgebraicQ3i::to_string() const {
  return "(" + one.to_string() + ", " + sqrt3.to_string() + ", " + i.to_string() + ", " +
         i_sqrt3.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const AlgebraicQ3i& value) {
  return os << value.to_string();
}

AlgebraicQ3i alg_add(const AlgebraicQ3i& x, const AlgebraicQ3i& y) {
  AlgebraicQ3i out = x;
  out += y;
  return out;
}

AlgebraicQ3i alg_mul(const AlgebraicQ3i& x, const AlgebraicQ3i& y) {
  const Rational three(3);
  const auto& [a, b, c, d] = x;
  const auto& [p, q, r, s] = y;
  return {
      a * p + three * (b * q) - c * r - three * (d * s),
      a * q + b * p - c * s - d * r,
      a * r + c * p + three * (b * s) + three * (d * q),
      a * s + d * p + b * r + c * q,
  };
}

AlgebraicQ3i alg_pow(const AlgebraicQ3i& x, std::uint64_t k) {
  AlgebraicQ3i result = AlgebraicQ3i::from_rational(1);
  AlgebraicQ3i square = x;
  while (k != 0) {
    if (k & 1u) result = alg_mul(result, square);
    k >>= 1;
    if (k != 0) square = alg_mul(square, square);
  }
  return result;
}

AlgebraicQ3i alg_scale(const AlgebraicQ3i& x, const Rational& factor) {
  return {x.one * factor, x.sqrt3 * factor, x.i * factor, x.i_sqrt3 * factor};
}

BigInt alg_to_integer(const AlgebraicQ3i& x) {
  if (!x.sqrt3.is_zero() || !x.i.is_zero() || !x.i_sqrt3.is_zero() || !x.one.is_integer()) {
    throw NotRationalInteger("value " + x.to_string() + " is not a rational integer");
  }
  return x.one.numerator();
}

}  // namespace trinom
