// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "trinom/bigint.hpp"
#include "trinom/kernels.hpp"

#ifdef TRINOM_HAVE_GMP
#include <gmpxx.h>
#endif

using namespace trinom;

namespace {

std::string random_decimal(std::mt19937_64& rng, std::size_t max_digits) {
  const std::size_t digits = 1 + rng() % max_digits;
  std::string s;
  if (rng() & 1) s.push_back('-');
  s.push_back(static_cast<char>('1' + rng() % 9));
  for (std::size_t i = 1; i < digits; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
  return s;
}

}  // namespace

TEST(BigInt, ZeroIsCanonical) {
  EXPECT_TRUE(BigInt().is_zero());
  EXPECT_TRUE(BigInt(0).limbs().empty());
  EXPECT_FALSE((BigInt(5) - BigInt(5)).is_negative());
  EXPECT_EQ(-BigInt(), BigInt());
  EXPECT_EQ(BigInt::from_string("-0"), BigInt());
  EXPECT_EQ(BigInt().to_string(), "0");
}

TEST(BigInt, Int64RoundTrip) {
  for (std::int64_t v : {std::numeric_limits<std::int64_t>::min(), std::int64_t{-1}, std::int64_t{0},
                         std::int64_t{4294967296}, std::numeric_limits<std::int64_t>::max()}) {
    EXPECT_EQ(BigInt(v).to_int64(), v);
    EXPECT_EQ(BigInt(v).to_string(), std::to_string(v));
  }
  EXPECT_FALSE((BigInt(std::numeric_limits<std::int64_t>::max()) + BigInt(1)).to_int64());
}

TEST(BigInt, ParseRejectsGarbage) {
  for (const char* bad : {"", "-", "+", "+1", "12a", " 1", "1 ", "0x10", "--1"}) {
    EXPECT_THROW(BigInt::from_string(bad), std::invalid_argument) << bad;
  }
  EXPECT_EQ(BigInt::from_string("-00042"), BigInt(-42));
}

TEST(BigInt, DivisionTruncatesTowardZero) {
  EXPECT_EQ(BigInt(-7) / BigInt(2), BigInt(-3));
  EXPECT_EQ(BigInt(-7) % BigInt(2), BigInt(-1));
  EXPECT_EQ(BigInt(7) / BigInt(-2), BigInt(-3));
  EXPECT_THROW(BigInt(1) / BigInt(), std::domain_error);
}

TEST(BigInt, PowersOfThree) {
  EXPECT_EQ(pow3(0), BigInt(1));
  EXPECT_EQ(pow3(12), BigInt(531441));
  EXPECT_EQ(BigInt::pow(BigInt(-2), 63), BigInt(std::numeric_limits<std::int64_t>::min()));
  EXPECT_EQ(BigInt::pow(BigInt(), 0), BigInt(1));
}

TEST(BigInt, LinearCombinationRejectsOversizedCoefficients) {
  const BigInt x(1);
  EXPECT_THROW(linear_combination({{std::numeric_limits<std::int32_t>::max(), &x}, {1, &x}}),
               std::overflow_error);
  EXPECT_EQ(linear_combination({{3, &x}, {-3, &x}}), BigInt());
}

TEST(BigInt, LinearCombinationBorrowsAcrossLimbs) {
  const BigInt big = pow3(400);
  const BigInt one(1);
  EXPECT_EQ(linear_combination({{1, &big}, {-1, &one}}), big - one);
  EXPECT_EQ(linear_combination({{-1, &big}, {1, &one}}), one - big);
  EXPECT_EQ(linear_combination({{27, &big}, {-27, &big}}), BigInt());
}

#ifdef TRINOM_HAVE_GMP

namespace {

mpz_class to_mpz(const BigInt& v) { return mpz_class(v.to_string()); }

}  // namespace

class BigIntOracle : public ::testing::TestWithParam<kernels::Backend> {};

TEST_P(BigIntOracle, ArithmeticMatchesGmp) {
  kernels::ScopedBackend scope(GetParam());
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 400; ++trial) {
    const std::string sa = random_decimal(rng, 300);
    const std::string sb = random_decimal(rng, trial % 3 == 0 ? 12 : 300);
    const BigInt a = BigInt::from_string(sa);
    const BigInt b = BigInt::from_string(sb);
    const mpz_class ga(sa);
    const mpz_class gb(sb);

    ASSERT_EQ(to_mpz(a), ga);
    ASSERT_EQ(to_mpz(a + b), mpz_class(ga + gb)) << sa << " + " << sb;
    ASSERT_EQ(to_mpz(a - b), mpz_class(ga - gb)) << sa << " - " << sb;
    ASSERT_EQ(to_mpz(a * b), mpz_class(ga * gb)) << sa << " * " << sb;
    // mpz tdiv matches C++ truncating semantics
    ASSERT_EQ(to_mpz(a / b), mpz_class(ga / gb)) << sa << " / " << sb;
    ASSERT_EQ(to_mpz(a % b), mpz_class(ga % gb)) << sa << " % " << sb;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    ASSERT_EQ(to_mpz(BigInt::gcd(a, b)), g);
    ASSERT_EQ(a < b, ga < gb);

    const auto c1 = static_cast<std::int32_t>(rng() % 2000) - 1000;
    const auto c2 = static_cast<std::int32_t>(rng() % 2000) - 1000;
    ASSERT_EQ(to_mpz(linear_combination({{c1, &a}, {c2, &b}})), mpz_class(c1 * ga + c2 * gb));

    BigInt s = a.abs();
    const auto d = static_cast<std::uint32_t>(1 + rng() % 0xfffffffeu);
    const std::uint32_t rem = s.div_small(d);
    mpz_class q = abs(ga);
    ASSERT_EQ(rem, mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), d));
    ASSERT_EQ(to_mpz(s), q);
  }
}

TEST_P(BigIntOracle, PowMatchesGmp) {
  kernels::ScopedBackend scope(GetParam());
  for (unsigned e : {0u, 1u, 31u, 32u, 33u, 500u, 3000u}) {
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 3, e);
    EXPECT_EQ(to_mpz(pow3(e)), expected) << e;
    mpz_class neg;
    mpz_pow_ui(neg.get_mpz_t(), mpz_class(-12345).get_mpz_t(), e);
    EXPECT_EQ(to_mpz(BigInt::pow(BigInt(-12345), e)), neg) << e;
  }
}

INSTANTIATE_TEST_SUITE_P(Backends, BigIntOracle,
                         ::testing::ValuesIn(kernels::available_backends()),
                         [](const auto& info) { return std::string(kernels::backend_name(info.param)); });

#endif  // TRINOM_HAVE_GMP
