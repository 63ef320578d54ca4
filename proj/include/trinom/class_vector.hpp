#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "trinom/bigint.hpp"

namespace trinom {

/// Residue class of a letter-count triple (n1, n2, n3) with n1+n2+n3 = 3n:
/// A all counts = 0 mod 3, B all = 1, C all = 2, D one of each residue.
enum class ClassLabel : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<ClassLabel, 4> kAllClasses{ClassLabel::A, ClassLabel::B,
                                                       ClassLabel::C, ClassLabel::D};

constexpr std::size_t index_of(ClassLabel label) noexcept {
  return static_cast<std::size_t>(label);
}

constexpr char to_char(ClassLabel label) noexcept { return "ABCD"[index_of(label)]; }

/// Accepts "A".."D" (case-insensitive); throws std::invalid_argument otherwise.
ClassLabel parse_class(std::string_view text);

/// (C_A(n), C_B(n), C_C(n), C_D(n)) at index n.
struct ClassVector {
  std::uint64_t n = 0;
  std::array<BigInt, 4> counts{};

  const BigInt& operator[](ClassLabel label) const noexcept { return counts[index_of(label)]; }
  BigInt& operator[](ClassLabel label) noexcept { return counts[index_of(label)]; }

  const BigInt& a() const noexcept { return counts[0]; }
  const BigInt& b() const noexcept { return counts[1]; }
  const BigInt& c() const noexcept { return counts[2]; }
  const BigInt& d() const noexcept { return counts[3]; }

  BigInt total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

}  // namespace trinom
