// SPDX-License-Identifier: Apache-2.0

#include "trinom/counters.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "trinom/errors.hpp"

namespace trinom {
namespace {

constexpr std::int64_t kMaxSmallFactor = 0xffffffffLL;

// Class of a residue triple whose sum is 0 mod 3.
constexpr ClassLabel class_of_residues(int r1, int r2, int r3) noexcept {
  if (r1 == r2 && r2 == r3) return static_cast<ClassLabel>(r1);
  return ClassLabel::D;
}

struct Pattern {
  std::array<std::int64_t, 3> offsets;
  std::int64_t shift;
  std::uint32_t multiplicity;
};

constexpr Pattern pattern_for(ClassLabel label) noexcept {
  switch (label) {
    case ClassLabel::A:
      return {{0, 0, 0}, 0, 1};
    case ClassLabel::B:
      return {{1, 1, 1}, 1, 1};
    case ClassLabel::C:
      return {{2, 2, 2}, 2, 1};
    case ClassLabel::D:
      return {{0, 1, 2}, 1, 6};
  }
  return {{0, 0, 0}, 0, 1};
}

using Tally = std::array<std::uint64_t, 4>;

// Enumerates every suffix of `suffix_len` letters behind a fixed prefix whose
// letter counts are `counts`.
void tally_suffixes(std::array<std::int64_t, 3> counts, std::size_t suffix_len, Tally& tally) {
  std::vector<std::uint8_t> digits(suffix_len, 0);
  counts[0] += static_cast<std::int64_t>(suffix_len);
  for (;;) {
    ++tally[index_of(class_of_residues(static_cast<int>(counts[0] % 3),
                                       static_cast<int>(counts[1] % 3),
                                       static_cast<int>(counts[2] % 3)))];
    std::size_t pos = suffix_len;
    for (;;) {
      if (pos == 0) return;
      --pos;
      const std::uint8_t d = digits[pos];
      --counts[d];
      if (d < 2) {
        digits[pos] = static_cast<std::uint8_t>(d + 1);
        ++counts[d + 1];
        break;
      }
      digits[pos] = 0;
      ++counts[0];
    }
  }
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return BigInt();
  if (n > kMaxSmallFactor) throw DomainError("binomial: n too large");
  k = std::min(k, n - k);
  BigInt r(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    r.mul_small(static_cast<std::uint32_t>(n - k + i));
    r.div_small(static_cast<std::uint32_t>(i));
  }
  return r;
}

BigInt trinomial(std::int64_t total, std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  if (total < 0 || n1 < 0 || n2 < 0 || n3 < 0) return BigInt();
  if (n1 + n2 + n3 != total) {
    throw ArityMismatch("trinomial: " + std::to_string(n1) + "+" + std::to_string(n2) + "+" +
                        std::to_string(n3) + " != " + std::to_string(total));
  }
  return binomial(total, n1) * binomial(total - n1, n2);
}

ClassLabel classify(const Composition& c) {
  if (c.n1 < 0 || c.n2 < 0 || c.n3 < 0) throw DomainError("classify: negative letter count");
  if (c.length() % 3 != 0) {
    throw NotDivisibleBy3("classify: word length " + std::to_string(c.length()) +
                          " is not a multiple of 3");
  }
  return class_of_residues(static_cast<int>(c.n1 % 3), static_cast<int>(c.n2 % 3),
                           static_cast<int>(c.n3 % 3));
}

BigInt direct_sum(ClassLabel label, std::uint64_t n) {
  const Pattern p = pattern_for(label);
  const auto total = static_cast<std::int64_t>(3 * n);
  const std::int64_t m = static_cast<std::int64_t>(n) - p.shift;
  BigInt sum;
  for (std::int64_t k1 = 0; k1 <= m; ++k1) {
    for (std::int64_t k2 = 0; k1 + k2 <= m; ++k2) {
      const std::int64_t k3 = m - k1 - k2;
      sum += trinomial(total, 3 * k1 + p.offsets[0], 3 * k2 + p.offsets[1],
                       3 * k3 + p.offsets[2]);
    }
  }
  sum.mul_small(p.multiplicity);
  return sum;
}

ClassVector brute_force_words(std::uint64_t n, unsigned workers) {
  if (n > kBruteForceMaxN) {
    throw TooLarge("brute_force_words: n=" + std::to_string(n) + " exceeds " +
                   std::to_string(kBruteForceMaxN));
  }
  const std::size_t length = 3 * n;
  workers = std::max(1u, workers);

  std::size_t prefix_len = 0;
  std::uint64_t prefixes = 1;
  while (prefixes < workers && prefix_len < length) {
    ++prefix_len;
    prefixes *= 3;
  }
  const std::size_t suffix_len = length - prefix_len;

  auto run = [&](unsigned worker, Tally& tally) {
    for (std::uint64_t p = worker; p < prefixes; p += workers) {
      std::array<std::int64_t, 3> counts{0, 0, 0};
      std::uint64_t code = p;
      for (std::size_t i = 0; i < prefix_len; ++i) {
        ++counts[code % 3];
        code /= 3;
      }
      tally_suffixes(counts, suffix_len, tally);
    }
  };

  std::vector<Tally> tallies(workers, Tally{0, 0, 0, 0});
  if (workers == 1) {
    run(0, tallies[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w, std::ref(tallies[w]));
  }

  ClassVector out;
  out.n = n;
  for (std::size_t k = 0; k < 4; ++k) {
    std::uint64_t sum = 0;
    for (const auto& t : tallies) sum += t[k];
    out.counts[k] = BigInt(static_cast<std::int64_t>(sum));
  }
  return out;
}

ClassVector composition_sum(std::uint64_t n) {
  const auto total = static_cast<std::int64_t>(3 * n);
  if (total > kMaxSmallFactor) throw DomainError("composition_sum: n too large");
  ClassVector out;
  out.n = n;

  BigInt outer(1);  // binomial(total, n1)
  for (std::int64_t n1 = 0; n1 <= total; ++n1) {
    const std::int64_t rest = total - n1;
    BigInt coeff = outer;  // trinomial(total; n1, n2, rest - n2)
    for (std::int64_t n2 = 0; n2 <= rest; ++n2) {
      out[class_of_residues(static_cast<int>(n1 % 3), static_cast<int>(n2 % 3),
                            static_cast<int>((rest - n2) % 3))] += coeff;
      coeff.mul_small(static_cast<std::uint32_t>(rest - n2));
      coeff.div_small(static_cast<std::uint32_t>(n2 + 1));
    }
    outer.mul_small(static_cast<std::uint32_t>(total - n1));
    outer.div_small(static_cast<std::uint32_t>(n1 + 1));
  }
  return out;
}

}  // namespace trinom
