// SPDX-License-Identifier: Apache-2.0

#include "trinom/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace trinom::kernels {
namespace {

void mul_row_neon(std::span<std::uint64_t> acc, std::span<const std::uint32_t> b,
                  std::uint32_t a) noexcept {
  const std::size_t n = b.size();
  const uint32x2_t va = vdup_n_u32(a);
  std::uint64_t carry_hi = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t p = vmull_u32(vld1_u32(b.data() + i), va);
    const uint64x2_t lo = vandq_u64(p, vdupq_n_u64(0xffffffffu));
    const uint64x2_t hi = vshrq_n_u64(p, 32);
    // [carry, hi0]
    const uint64x2_t hi_shifted = vextq_u64(vdupq_n_u64(carry_hi), hi, 1);
    carry_hi = vgetq_lane_u64(hi, 1);
    uint64x2_t sum = vld1q_u64(acc.data() + i);
    sum = vaddq_u64(sum, vaddq_u64(lo, hi_shifted));
    vst1q_u64(acc.data() + i, sum);
  }
  acc[i] += carry_hi;
  const std::uint64_t wide = a;
  for (; i < n; ++i) {
    const std::uint64_t p = wide * b[i];
    acc[i] += p & 0xffffffffu;
    acc[i + 1] += p >> 32;
  }
}

void scale_accumulate_neon(std::span<std::int64_t> acc, std::span<const std::uint32_t> x,
                           std::int32_t coeff) noexcept {
  const std::size_t n = x.size();
  const bool negative = coeff < 0;
  const std::uint32_t magnitude =
      negative ? static_cast<std::uint32_t>(-static_cast<std::int64_t>(coeff))
               : static_cast<std::uint32_t>(coeff);
  const uint32x2_t vc = vdup_n_u32(magnitude);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t x4 = vld1q_u32(x.data() + i);
    const int64x2_t p0 = vreinterpretq_s64_u64(vmull_u32(vget_low_u32(x4), vc));
    const int64x2_t p1 = vreinterpretq_s64_u64(vmull_u32(vget_high_u32(x4), vc));
    int64x2_t s0 = vld1q_s64(acc.data() + i);
    int64x2_t s1 = vld1q_s64(acc.data() + i + 2);
    if (negative) {
      s0 = vsubq_s64(s0, p0);
      s1 = vsubq_s64(s1, p1);
    } else {
      s0 = vaddq_s64(s0, p0);
      s1 = vaddq_s64(s1, p1);
    }
    vst1q_s64(acc.data() + i, s0);
    vst1q_s64(acc.data() + i + 2, s1);
  }
  const std::int64_t c = coeff;
  for (; i < n; ++i) {
    acc[i] += c * static_cast<std::int64_t>(x[i]);
  }
}

constexpr KernelTable kNeon{Backend::neon, "neon", &mul_row_neon, &scale_accumulate_neon};

}  // namespace

// Advanced SIMD is mandatory on AArch64.
const KernelTable* neon_table() noexcept { return &kNeon; }

}  // namespace trinom::kernels

#else

namespace trinom::kernels {
const KernelTable* neon_table() noexcept { return nullptr; }
}  // namespace trinom::kernels

#endif
