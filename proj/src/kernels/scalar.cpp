// SPDX-License-Identifier: Apache-2.0

#include "trinom/kernels.hpp"

namespace trinom::kernels {
namespace {

void mul_row_scalar(std::span<std::uint64_t> acc, std::span<const std::uint32_t> b,
                    std::uint32_t a) noexcept {
  const std::uint64_t wide = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::uint64_t p = wide * b[i];
    acc[i] += p & 0xffffffffu;
    acc[i + 1] += p >> 32;
  }
}

void scale_accumulate_scalar(std::span<std::int64_t> acc, std::span<const std::uint32_t> x,
                             std::int32_t coeff) noexcept {
  const std::int64_t c = coeff;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc[i] += c * static_cast<std::int64_t>(x[i]);
  }
}

constexpr KernelTable kScalar{Backend::scalar, "scalar", &mul_row_scalar,
                              &scale_accumulate_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace trinom::kernels
