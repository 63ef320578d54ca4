#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cstdint>

#include "trinom/bigint.hpp"
#include "trinom/class_vector.hpp"

namespace trinom {

struct Composition {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n3 = 0;

  std::int64_t length() const noexcept { return n1 + n2 + n3; }
};

/// N! / (n1! n2! n3!) as a product of two binomials.
///
/// Any negative argument yields 0, so callers can sum over shifted index
/// ranges without boundary cases. Throws ArityMismatch when all arguments are
/// non-negative but n1 + n2 + n3 != N.
BigInt trinomial(std::int64_t total, std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// Exact binomial coefficient; 0 outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Throws NotDivisibleBy3 if the length is not a multiple of 3, DomainError
/// for negative counts.
ClassLabel classify(const Composition& c);

/// C_label(n) straight from its defining sum over k1 + k2 + k3 = n - shift.
BigInt direct_sum(ClassLabel label, std::uint64_t n);

/// Largest n accepted by brute_force_words (3^15 words).
inline constexpr std::uint64_t kBruteForceMaxN = 5;

/// Enumerates every word of length 3n over a three-letter alphabet and tallies
/// the class of its letter counts. `workers` splits the enumeration by leading
/// letters; the result does not depend on it. Throws TooLarge for n > 5.
ClassVector brute_force_words(std::uint64_t n, unsigned workers = 1);

/// Sums trinomial(3n; n1, n2, n3) over all compositions into their class
/// buckets. O(n^2) coefficients, each derived from its neighbour by one small
/// multiply and one exact small division.
ClassVector composition_sum(std::uint64_t n);

}  // namespace trinom
