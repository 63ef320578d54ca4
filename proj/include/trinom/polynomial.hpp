#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "trinom/algebraic.hpp"
#include "trinom/bigint.hpp"

namespace trinom {

/// Dense integer polynomial, coefficient index = degree. No trailing zero
/// coefficients; the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// c * x^k
  static IntPolynomial monomial(BigInt c, std::size_t k);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  BigInt coefficient(std::size_t k) const;
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  BigInt evaluate(const BigInt& x) const;
  AlgebraicQ3i evaluate(const AlgebraicQ3i& x) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace trinom
