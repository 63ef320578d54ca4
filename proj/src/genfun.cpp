// SPDX-License-Identifier: Apache-2.0

#include "trinom/genfun.hpp"

#include <limits>

#include "trinom/errors.hpp"

namespace trinom {
namespace {

RationalGF normalized(IntPolynomial numerator, IntPolynomial denominator) {
  if (denominator.coefficient(0).is_negative()) {
    numerator = -numerator;
    denominator = -denominator;
  }
  return {std::move(numerator), std::move(denominator)};
}

}  // namespace

RationalGF gf_for_class(ClassLabel label) {
  // (27x - 1)(27x^2 + 1) for A and B, (1 - 27x)(1 + 27x^2) for C
  const IntPolynomial falling = IntPolynomial{-1, 27} * IntPolynomial{1, 0, 27};
  const IntPolynomial rising = IntPolynomial{1, -27} * IntPolynomial{1, 0, 27};
  switch (label) {
    case ClassLabel::A:
      return normalized(IntPolynomial{-1, 24, -9, 162}, falling);
    case ClassLabel::B:
      // 6x (27x^2 + 12x - 1)
      return normalized(IntPolynomial{0, 6} * IntPolynomial{-1, 12, 27}, falling);
    case ClassLabel::C:
      // 18x^2 (5 - 9x)
      return normalized(IntPolynomial{0, 0, 18} * IntPolynomial{5, -9}, rising);
    case ClassLabel::D:
      return normalized(IntPolynomial{0, 18}, IntPolynomial{1, -27});
  }
  throw DomainError("gf_for_class: unknown class");
}

std::vector<BigInt> gf_coefficients(const RationalGF& gf, std::uint64_t max_n) {
  const auto& q = gf.denominator.coefficients();
  if (q.empty() || q[0].abs() != BigInt(1)) {
    throw NonUnitConstantTerm("gf_coefficients: denominator constant term must be +/-1");
  }
  const bool negate = q[0].is_negative();

  // Small denominators go through one linear-combination pass per coefficient.
  std::vector<std::int32_t> small_q;
  bool small = true;
  std::int64_t budget = 1;
  for (std::size_t j = 1; j < q.size() && small; ++j) {
    const auto v = q[j].to_int64();
    if (!v || *v > std::numeric_limits<std::int32_t>::max() ||
        *v < -std::numeric_limits<std::int32_t>::max()) {
      small = false;
      break;
    }
    budget += *v < 0 ? -*v : *v;
    small_q.push_back(static_cast<std::int32_t>(*v));
  }
  small = small && budget < (std::int64_t{1} << 31);

  std::vector<BigInt> c;
  c.reserve(max_n + 1);
  std::vector<ScaledTerm> terms;
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    const BigInt p = gf.numerator.coefficient(n);
    BigInt value;
    if (small) {
      terms.clear();
      terms.push_back({1, &p});
      for (std::size_t j = 1; j < q.size() && j <= n; ++j) {
        terms.push_back({-small_q[j - 1], &c[n - j]});
      }
      value = linear_combination(terms);
    } else {
      value = p;
      for (std::size_t j = 1; j < q.size() && j <= n; ++j) value -= q[j] * c[n - j];
    }
    c.push_back(negate ? -value : value);
  }
  return c;
}

}  // namespace trinom
