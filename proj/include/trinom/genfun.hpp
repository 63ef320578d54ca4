#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <vector>

#include "trinom/class_vector.hpp"
#include "trinom/polynomial.hpp"

namespace trinom {

/// numerator(x) / denominator(x) as a formal power series.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;  // constant term nonzero
};

/// Generating function sum_n C_label(n) x^n with the denominator expanded and
/// normalized to constant term +1.
RationalGF gf_for_class(ClassLabel label);

/// Taylor coefficients c_0..c_max_n from
///   c_n = (p_n - sum_{j>=1} q_j c_{n-j}) / q_0.
/// Throws NonUnitConstantTerm unless |q_0| = 1.
std::vector<BigInt> gf_coefficients(const RationalGF& gf, std::uint64_t max_n);

}  // namespace trinom
