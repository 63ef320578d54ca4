#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <iosfwd>
#include <string>

#include "trinom/rational.hpp"

namespace trinom {

/// Element of Q(i, sqrt3) in the basis {1, sqrt3, i, i*sqrt3}.
///
/// Coordinates are unique for a given element, so == is exact equality.
/// Products follow sqrt3^2 = 3, i^2 = -1, (i*sqrt3)^2 = -3.
struct AlgebraicQ3i {
  Rational one;      // a
  Rational sqrt3;    // b
  Rational i;        // c
  Rational i_sqrt3;  // d

  static AlgebraicQ3i from_rational(Rational value) { return {std::move(value), 0, 0, 0}; }
  static AlgebraicQ3i unit_i() { return {0, 0, 1, 0}; }
  static AlgebraicQ3i unit_sqrt3() { return {0, 1, 0, 0}; }
  static AlgebraicQ3i unit_i_sqrt3() { return {0, 0, 0, 1}; }

  bool is_zero() const noexcept {
    return one.is_zero() && sqrt3.is_zero() && i.is_zero() && i_sqrt3.is_zero();
  }

  /// i -> -i
  AlgebraicQ3i conjugate() const;

  AlgebraicQ3i operator-() const;
  AlgebraicQ3i& operator+=(const AlgebraicQ3i& rhs);
  AlgebraicQ3i& operator-=(const AlgebraicQ3i& rhs);

  friend bool operator==(const AlgebraicQ3i&, const AlgebraicQ3i&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const AlgebraicQ3i& value);
};

AlgebraicQ3i alg_add(const AlgebraicQ3i& x, const AlgebraicQ3i& y);
AlgebraicQ3i alg_mul(const AlgebraicQ3i& x, const AlgebraicQ3i& y);
/// Binary exponentiation; x^0 = 1.
AlgebraicQ3i alg_pow(const AlgebraicQ3i& x, std::uint64_t k);
/// Scales every coordinate by a rational.
AlgebraicQ3i alg_scale(const AlgebraicQ3i& x, const Rational& factor);
/// Throws NotRationalInteger unless x is an integer in the 1 coordinate only.
BigInt alg_to_integer(const AlgebraicQ3i& x);

inline AlgebraicQ3i operator+(const AlgebraicQ3i& x, const AlgebraicQ3i& y) { return alg_add(x, y); }
inline AlgebraicQ3i operator-(AlgebraicQ3i x, const AlgebraicQ3i& y) { return x -= y; }
inline AlgebraicQ3i operator*(const AlgebraicQ3i& x, const AlgebraicQ3i& y) { return alg_mul(x, y); }

}  // namespace trinom
