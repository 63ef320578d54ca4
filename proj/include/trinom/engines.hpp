#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trinom/bigint.hpp"
#include "trinom/class_vector.hpp"

namespace trinom {

/// Every independent way this library can produce C_label(n).
enum class EngineId { brute, compsum, coupled, decoupled, quartic_c, closed, rootbasis, mod4, genfun };

inline constexpr std::array<EngineId, 9> kAllEngines{
    EngineId::brute,  EngineId::compsum,   EngineId::coupled, EngineId::decoupled, EngineId::quartic_c,
    EngineId::closed, EngineId::rootbasis, EngineId::mod4,    EngineId::genfun};

std::string_view engine_name(EngineId engine) noexcept;
/// Throws std::invalid_argument for unknown names.
EngineId parse_engine(std::string_view name);

std::uint64_t engine_min_n(EngineId engine) noexcept;
std::optional<std::uint64_t> engine_max_n(EngineId engine) noexcept;
bool engine_produces(EngineId engine, ClassLabel label) noexcept;

/// Throws DomainError describing why (engine, label, n) is out of range.
void check_engine_domain(EngineId engine, ClassLabel label, std::uint64_t n);

BigInt compute(EngineId engine, ClassLabel label, std::uint64_t n);

/// All four classes at n. DomainError for quartic-c, which only produces C.
ClassVector compute_all(EngineId engine, std::uint64_t n);

/// Vectors for n = first..last, using each engine's sequential form where it
/// has one.
std::vector<ClassVector> compute_range(EngineId engine, std::uint64_t first, std::uint64_t last);

/// One class for n = first..last.
std::vector<BigInt> compute_class_range(EngineId engine, ClassLabel label, std::uint64_t first,
                                        std::uint64_t last);

}  // namespace trinom
