#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <iosfwd>
#include <string>

#include "trinom/bigint.hpp"

namespace trinom {

/// Reduced fraction with a positive denominator. Every constructor and
/// operation re-normalizes, so structural equality is value equality.
class Rational {
 public:
  Rational() : den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(std::int64_t value) : num_(value), den_(1) {}       // NOLINT
  /// Throws std::domain_error for a zero denominator.
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == BigInt(1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace trinom
