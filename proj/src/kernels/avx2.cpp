// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernels. This translation unit is compiled with -mavx2 and is only
// reached after a runtime CPUID check, so nothing here may run at static init.

#include "trinom/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace trinom::kernels {
namespace {

void mul_row_avx2(std::span<std::uint64_t> acc, std::span<const std::uint32_t> b,
                  std::uint32_t a) noexcept {
  const std::size_t n = b.size();
  const __m256i va = _mm256_set1_epi64x(a);
  const __m256i lo_mask = _mm256_set1_epi64x(0xffffffffLL);
  std::uint64_t carry_hi = 0;  // hi32 of the previous block's last product
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i b4 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b.data() + i));
    const __m256i p = _mm256_mul_epu32(_mm256_cvtepu32_epi64(b4), va);
    const __m256i lo = _mm256_and_si256(p, lo_mask);
    const __m256i hi = _mm256_srli_epi64(p, 32);
    // lane k takes hi of lane k-1; lane 0 takes the carried hi
    __m256i hi_shifted = _mm256_permute4x64_epi64(hi, _MM_SHUFFLE(2, 1, 0, 3));
    const std::uint64_t next_carry = static_cast<std::uint64_t>(_mm256_extract_epi64(hi, 3));
    hi_shifted = _mm256_blend_epi32(hi_shifted, _mm256_set1_epi64x(static_cast<long long>(carry_hi)),
                                    0x03);
    carry_hi = next_carry;
    __m256i* dst = reinterpret_cast<__m256i*>(acc.data() + i);
    __m256i sum = _mm256_loadu_si256(dst);
    sum = _mm256_add_epi64(sum, _mm256_add_epi64(lo, hi_shifted));
    _mm256_storeu_si256(dst, sum);
  }
  acc[i] += carry_hi;
  const std::uint64_t wide = a;
  for (; i < n; ++i) {
    const std::uint64_t p = wide * b[i];
    acc[i] += p & 0xffffffffu;
    acc[i + 1] += p >> 32;
  }
}

void scale_accumulate_avx2(std::span<std::int64_t> acc, std::span<const std::uint32_t> x,
                           std::int32_t coeff) noexcept {
  const std::size_t n = x.size();
  const bool negative = coeff < 0;
  const std::uint32_t magnitude =
      negative ? static_cast<std::uint32_t>(-static_cast<std::int64_t>(coeff))
               : static_cast<std::uint32_t>(coeff);
  const __m256i vc = _mm256_set1_epi64x(magnitude);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i x0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x.data() + i));
    const __m128i x1 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x.data() + i + 4));
    const __m256i p0 = _mm256_mul_epu32(_mm256_cvtepu32_epi64(x0), vc);
    const __m256i p1 = _mm256_mul_epu32(_mm256_cvtepu32_epi64(x1), vc);
    __m256i* d0 = reinterpret_cast<__m256i*>(acc.data() + i);
    __m256i* d1 = reinterpret_cast<__m256i*>(acc.data() + i + 4);
    __m256i s0 = _mm256_loadu_si256(d0);
    __m256i s1 = _mm256_loadu_si256(d1);
    if (negative) {
      s0 = _mm256_sub_epi64(s0, p0);
      s1 = _mm256_sub_epi64(s1, p1);
    } else {
      s0 = _mm256_add_epi64(s0, p0);
      s1 = _mm256_add_epi64(s1, p1);
    }
    _mm256_storeu_si256(d0, s0);
    _mm256_storeu_si256(d1, s1);
  }
  const std::int64_t c = coeff;
  for (; i < n; ++i) {
    acc[i] += c * static_cast<std::int64_t>(x[i]);
  }
}

constexpr KernelTable kAvx2{Backend::avx2, "avx2", &mul_row_avx2, &scale_accumulate_avx2};

}  // namespace

const KernelTable* avx2_table() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace trinom::kernels

#else

namespace trinom::kernels {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace trinom::kernels

#endif
