// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <vector>

#include "trinom/counters.hpp"
#include "trinom/errors.hpp"
#include "trinom/genfun.hpp"

using namespace trinom;

namespace {

std::vector<BigInt> big(std::initializer_list<std::int64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace

TEST(GenFun, ClassAForm) {
  const auto gf = gf_for_class(ClassLabel::A);
  EXPECT_EQ(gf.denominator.coefficient(0), BigInt(1));
  // the printed numerator (-1, 24, -9, 162) up to the normalizing sign
  const IntPolynomial printed{-1, 24, -9, 162};
  EXPECT_TRUE(gf.numerator == printed || gf.numerator == -printed);
  EXPECT_EQ(gf.numerator.coefficient(0), BigInt(1));
}

TEST(GenFun, ClassDForm) {
  const auto gf = gf_for_class(ClassLabel::D);
  EXPECT_EQ(gf.numerator, (IntPolynomial{0, 18}));
  EXPECT_EQ(gf.denominator, (IntPolynomial{1, -27}));
}

TEST(GenFun, SharedDenominator) {
  const IntPolynomial shared{1, -27, 27, -729};
  for (auto label : {ClassLabel::A, ClassLabel::B, ClassLabel::C}) {
    EXPECT_EQ(gf_for_class(label).denominator, shared) << to_char(label);
  }
}

TEST(GenFun, CoefficientExamples) {
  EXPECT_EQ(gf_coefficients(gf_for_class(ClassLabel::D), 3), big({0, 18, 486, 13122}));
  EXPECT_EQ(gf_coefficients(gf_for_class(ClassLabel::A), 2), big({1, 3, 63}));
  EXPECT_EQ(gf_coefficients(gf_for_class(ClassLabel::B), 0), big({0}));
}

TEST(GenFun, NonUnitConstantTerm) {
  const RationalGF bad{IntPolynomial{1}, IntPolynomial{2, 1}};
  EXPECT_THROW(gf_coefficients(bad, 4), NonUnitConstantTerm);
}

TEST(GenFun, LargeCoefficientsUseGeneralPath) {
  // 1 / (1 - 3^40 x) has coefficients 3^(40 n)
  const RationalGF gf{IntPolynomial{1}, IntPolynomial(std::vector<BigInt>{BigInt(1), -pow3(40)})};
  const auto c = gf_coefficients(gf, 5);
  for (std::uint64_t n = 0; n <= 5; ++n) EXPECT_EQ(c[n], pow3(40 * n));
}

TEST(GenFun, StreamsSumToGeometric) {
  constexpr std::uint64_t kMax = 300;
  std::vector<BigInt> sum(kMax + 1);
  for (auto label : kAllClasses) {
    const auto c = gf_coefficients(gf_for_class(label), kMax);
    ASSERT_EQ(c.size(), kMax + 1);
    for (std::uint64_t n = 0; n <= kMax; ++n) sum[n] += c[n];
  }
  for (std::uint64_t n = 0; n <= kMax; ++n) ASSERT_EQ(sum[n], pow3(3 * n)) << n;
}

TEST(GenFun, MatchesCompositionSum) {
  std::vector<std::vector<BigInt>> streams;
  for (auto label : kAllClasses) streams.push_back(gf_coefficients(gf_for_class(label), 80));
  for (std::uint64_t n = 0; n <= 80; n += (n < 12 ? 1 : 17)) {
    const auto ref = composition_sum(n);
    for (auto label : kAllClasses) EXPECT_EQ(streams[index_of(label)][n], ref[label]) << n << to_char(label);
  }
}
