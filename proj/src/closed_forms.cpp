// SPDX-License-Identifier: Apache-2.0

#include "trinom/closed_forms.hpp"

#include <string>

#include "trinom/errors.hpp"

namespace trinom {
namespace {

void require_positive(std::uint64_t n, const char* op) {
  if (n == 0) throw DomainError(std::string(op) + ": n must be at least 1");
}

// (-1)^n
int parity_sign(std::uint64_t n) noexcept { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

RootSet RootSet::standard() {
  AlgebraicQ3i x2{0, 0, 0, 3};
  AlgebraicQ3i x3 = x2.conjugate();
  return {BigInt(27), std::move(x2), std::move(x3)};
}

AlgebraicQ3i half_power_of_three(std::uint64_t n) {
  require_positive(n, "half_power_of_three");
  // 3n - 2 even: integer power; odd: 3^((3n-3)/2) * sqrt3
  if (n % 2 == 0) return AlgebraicQ3i::from_rational(pow3((3 * n - 2) / 2));
  return {0, Rational(pow3((3 * n - 3) / 2)), 0, 0};
}

BigInt closed_form(ClassLabel label, std::uint64_t n) {
  require_positive(n, "closed_form");
  if (label == ClassLabel::D) {
    BigInt v = pow3(3 * n - 1);
    v.mul_small(2);
    return v;
  }

  const AlgebraicQ3i dominant = AlgebraicQ3i::from_rational(pow3(3 * n - 2));
  const AlgebraicQ3i oscillation =
      alg_mul(alg_pow(AlgebraicQ3i::unit_i(), n), half_power_of_three(n));
  const Rational even_part(1 + parity_sign(n));  // 1 + (-1)^n
  const Rational odd_part(1 - parity_sign(n));   // 1 - (-1)^n

  if (label == ClassLabel::A) {
    return alg_to_integer(dominant + alg_scale(oscillation, even_part));
  }

  // B: (1 + (-1)^n) + i sqrt3 (1 - (-1)^n);  C: the i sqrt3 term negated.
  const Rational root_sign(label == ClassLabel::B ? 1 : -1);
  const AlgebraicQ3i bracket{even_part, 0, 0, odd_part * root_sign};
  const AlgebraicQ3i correction = alg_scale(alg_mul(bracket, oscillation), Rational(1, 2));
  return alg_to_integer(dominant - correction);
}

BigInt root_basis(ClassLabel label, std::uint64_t n) {
  require_positive(n, "root_basis");
  const RootSet roots = RootSet::standard();
  const Rational x1_pow(BigInt::pow(roots.x1, n));

  if (label == ClassLabel::D) {
    return alg_to_integer(AlgebraicQ3i::from_rational(x1_pow * Rational(2, 3)));
  }

  const AlgebraicQ3i x2_pow = alg_pow(roots.x2, n);
  const AlgebraicQ3i x3_pow = alg_pow(roots.x3, n);
  const AlgebraicQ3i base = AlgebraicQ3i::from_rational(x1_pow * Rational(1, 9));

  if (label == ClassLabel::A) {
    const Rational third(1, 3);
    return alg_to_integer(base + alg_scale(x2_pow, third) + alg_scale(x3_pow, third));
  }

  // (1 + i sqrt3)/6 and (1 - i sqrt3)/6; C swaps which root each multiplies.
  const AlgebraicQ3i plus{Rational(1, 6), 0, 0, Rational(1, 6)};
  const AlgebraicQ3i minus{Rational(1, 6), 0, 0, Rational(-1, 6)};
  const AlgebraicQ3i& on_x2 = label == ClassLabel::B ? plus : minus;
  const AlgebraicQ3i& on_x3 = label == ClassLabel::B ? minus : plus;
  return alg_to_integer(base - alg_mul(on_x2, x2_pow) - alg_mul(on_x3, x3_pow));
}

BigInt case_mod4(ClassLabel label, std::uint64_t n) {
  require_positive(n, "case_mod4");
  if (label == ClassLabel::D) {
    BigInt v = pow3(3 * n - 1);
    v.mul_small(2);
    return v;
  }

  const BigInt dominant = pow3(3 * n - 2);
  if (n % 2 == 0) {
    // (-1)^(n/2) 3^((3n-2)/2)
    BigInt wave = pow3((3 * n - 2) / 2);
    if ((n / 2) % 2 == 1) wave = -wave;
    if (label == ClassLabel::A) return dominant + wave + wave;
    return dominant - wave;
  }

  if (label == ClassLabel::A) return dominant;
  // s = +1 for n = 1 mod 4, -1 for n = 3 mod 4; C takes -s.
  int s = (n % 4 == 1) ? 1 : -1;
  if (label == ClassLabel::C) s = -s;
  const BigInt wave = pow3((3 * n - 1) / 2);
  return s > 0 ? dominant + wave : dominant - wave;
}

}  // namespace trinom
