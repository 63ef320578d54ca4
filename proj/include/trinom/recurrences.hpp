#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trinom/bigint.hpp"
#include "trinom/class_vector.hpp"

namespace trinom {

/// One step of the coupled recurrence: appending three letters to a word of
/// length 3n. Row = target class, column = source class, order (A, B, C, D).
/// Every column sums to 27.
inline constexpr std::array<std::array<std::int32_t, 4>, 4> kTransitionMatrix{{
    {3, 0, 6, 3},
    {6, 3, 0, 3},
    {0, 6, 3, 3},
    {18, 18, 18, 18},
}};

/// The n = 0 vector (1, 0, 0, 0): only the empty word, in class A.
ClassVector seed_vector();

ClassVector coupled_step(const ClassVector& v);

/// Vectors for n = 0..max_n.
std::vector<ClassVector> coupled_sequence(std::uint64_t max_n);

/// Only the vector at n; constant state.
ClassVector coupled_at(std::uint64_t n);

/// x(n) = 27 (x(n-1) - x(n-2) + 27 x(n-3)) for n >= 4, seeded at n = 1..3:
///   A (3, 63, 2187)   B (6, 90, 2106)   C (0, 90, 2268)
/// and x(0) = 1 for A, 0 for B and C. Throws DomainError for D.
BigInt decoupled_third_order(ClassLabel label, std::uint64_t n);
std::vector<BigInt> decoupled_third_order_sequence(ClassLabel label, std::uint64_t max_n);

/// C_D(n): 0 at n = 0, then C_D(1) = 18 and C_D(n) = 27 C_D(n-1).
BigInt decoupled_D(std::uint64_t n);
std::vector<BigInt> decoupled_D_sequence(std::uint64_t max_n);

/// C_C(n) = 26 C_C(n-1) + 702 C_C(n-3) + 729 C_C(n-4) for n >= 5, seeded with
/// C_C(1..4) = (0, 90, 2268, 58806) and C_C(0) = 0.
///
/// The quartic does not hold at n = 4 against the definitional C_C(0) = 0
/// (it gives 58968), so the seed runs through n = 4.
BigInt quartic_C(std::uint64_t n);
std::vector<BigInt> quartic_C_sequence(std::uint64_t max_n);

/// Expands (x + 1)(x^3 - 27(x^2 - x + 27)) and compares it coefficient by
/// coefficient with x^4 - 26x^3 - 702x - 729.
bool char_poly_check();

struct IdentityResult {
  std::string name;
  std::string formula;
  std::uint64_t first_n = 0;  // first index checked
  std::uint64_t last_n = 0;   // last index checked (inclusive); unused when checked == 0
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> first_failure;

  bool passed() const noexcept { return !first_failure.has_value(); }
};

struct IdentityReport {
  std::vector<IdentityResult> results;

  bool all_passed() const noexcept;
  /// Throws IdentityViolation for the first failing identity.
  void throw_if_failed() const;
};

/// Checks every elimination identity between the four sequences at each index
/// where all referenced terms exist (indices 0..seq.size()-1). seq[k] must
/// hold index k.
IdentityReport check_identities(std::span<const ClassVector> seq);

/// check_identities over coupled_sequence(max_n). Throws DomainError for
/// max_n < 4.
IdentityReport identity_suite(std::uint64_t max_n);

}  // namespace trinom
