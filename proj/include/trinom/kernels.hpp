#pragma once

// SPDX-License-Identifier: Apache-2.0
//
// Limb-level kernels behind BigInt. Every backend implements the same two
// data-parallel loops; carry propagation stays scalar in the caller.
//
//   mul_row:          acc[i]   += lo32(a * b[i])
//                     acc[i+1] += hi32(a * b[i])        (acc.size() == b.size() + 1)
//   scale_accumulate: acc[i]   += coeff * x[i]          (signed 64-bit lanes)
//
// mul_row adds at most two values below 2^32 per row into each column, so a
// column accumulator cannot overflow before 2^31 rows. scale_accumulate leaves
// overflow to the caller: the sum of |coeff| over all calls sharing one
// accumulator must stay below 2^31.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace trinom::kernels {

enum class Backend { scalar, avx2, neon };

struct KernelTable {
  Backend backend;
  std::string_view name;
  void (*mul_row)(std::span<std::uint64_t> acc, std::span<const std::uint32_t> b,
                  std::uint32_t a) noexcept;
  void (*scale_accumulate)(std::span<std::int64_t> acc, std::span<const std::uint32_t> x,
                           std::int32_t coeff) noexcept;
};

const KernelTable& scalar_table() noexcept;

// nullptr when the backend was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

const KernelTable* table_for(Backend backend) noexcept;

// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();

// The table BigInt uses. Picked on first call: the TRINOM_KERNELS environment
// variable (scalar|avx2|neon|auto) if set, otherwise the widest available.
const KernelTable& active() noexcept;

// Throws std::invalid_argument if the backend is unavailable.
void select(Backend backend);
void select_auto() noexcept;

Backend parse_backend(std::string_view name);
std::string_view backend_name(Backend backend) noexcept;

// RAII override, restores the previous table on destruction.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend backend);
  ~ScopedBackend();
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  const KernelTable* previous_;
};

namespace detail {
void set_active(const KernelTable* table) noexcept;
}  // namespace detail

}  // namespace trinom::kernels
