#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cstdint>

#include "trinom/algebraic.hpp"
#include "trinom/bigint.hpp"
#include "trinom/class_vector.hpp"

namespace trinom {

/// Roots of x^3 - 27(x^2 - x + 27): 27 and +/- 3^(3/2) i.
struct RootSet {
  BigInt x1;        // 27
  AlgebraicQ3i x2;  // 3 i sqrt3
  AlgebraicQ3i x3;  // conjugate of x2

  static RootSet standard();
};

/// The class counts as closed forms in Q(i, sqrt3): a dominant 3^(3n-2) term
/// plus an i^n 3^((3n-2)/2) oscillation (D: 2 * 3^(3n-1)). Odd n put the
/// half-integer power of 3 on the sqrt3 coordinate.
///
/// All three evaluators require n >= 1 (DomainError otherwise); the forms are
/// not integers at n = 0.
BigInt closed_form(ClassLabel label, std::uint64_t n);

/// Rational combinations of the n-th powers of the characteristic roots.
BigInt root_basis(ClassLabel label, std::uint64_t n);

/// Radical-free evaluation, branching on n mod 4.
BigInt case_mod4(ClassLabel label, std::uint64_t n);

/// 3^((3n-2)/2) as an element of the ring (integer for even n, integer times
/// sqrt3 for odd n). Requires n >= 1.
AlgebraicQ3i half_power_of_three(std::uint64_t n);

}  // namespace trinom
