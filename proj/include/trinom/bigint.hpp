#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trinom {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude with little-endian 32-bit limbs. The magnitude never has a
/// high zero limb and zero is always non-negative with no limbs, so equal
/// values have identical representations.
///
/// Addition, subtraction and multiplication run through the dispatched limb
/// kernels (see kernels.hpp); division and radix conversion are scalar.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses an optional '-' followed by decimal digits.
  /// Throws std::invalid_argument on anything else.
  static BigInt from_string(std::string_view text);

  static BigInt pow(const BigInt& base, std::uint64_t exponent);

  std::string to_string() const;

  bool is_zero() const noexcept { return limbs_.empty(); }
  bool is_negative() const noexcept { return negative_; }
  int sign() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }
  std::span<const std::uint32_t> limbs() const noexcept { return limbs_; }

  std::optional<std::int64_t> to_int64() const noexcept;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator/=(const BigInt& rhs);
  BigInt& operator%=(const BigInt& rhs);

  /// In-place multiply by a small non-negative factor.
  BigInt& mul_small(std::uint32_t factor);

  /// In-place truncating division of the magnitude; returns the magnitude's
  /// remainder. Throws std::domain_error on division by zero.
  std::uint32_t div_small(std::uint32_t divisor);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
  friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

  friend bool operator==(const BigInt&, const BigInt&) = default;
  friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) noexcept;

  /// Truncating division (quotient rounds toward zero, remainder takes the
  /// dividend's sign), matching built-in integer semantics.
  static std::pair<BigInt, BigInt> divmod(const BigInt& dividend, const BigInt& divisor);

  static BigInt gcd(BigInt a, BigInt b);

  friend std::ostream& operator<<(std::ostream& os, const BigInt& value);

 private:
  friend struct BigIntAccess;
  void trim() noexcept;

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;
};

/// One term of a small-coefficient linear combination.
struct ScaledTerm {
  std::int32_t coeff;
  const BigInt* value;
};

/// Computes sum(coeff * value) in a single pass over the limbs.
/// The absolute coefficients must sum to less than 2^31; std::overflow_error
/// otherwise.
BigInt linear_combination(std::span<const ScaledTerm> terms);
BigInt linear_combination(std::initializer_list<ScaledTerm> terms);

inline BigInt pow3(std::uint64_t exponent) { return BigInt::pow(BigInt(3), exponent); }

}  // namespace trinom
