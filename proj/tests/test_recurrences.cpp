// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "trinom/counters.hpp"
#include "trinom/errors.hpp"
#include "trinom/polynomial.hpp"
#include "trinom/recurrences.hpp"

using namespace trinom;
using trinom::testing::kFrozen;

namespace {

constexpr auto kA = index_of(ClassLabel::A);
constexpr auto kB = index_of(ClassLabel::B);
constexpr auto kC = index_of(ClassLabel::C);
constexpr auto kD = index_of(ClassLabel::D);

}  // namespace

TEST(TransitionMatrix, ColumnsSumTo27) {
  for (std::size_t col = 0; col < 4; ++col) {
    int sum = 0;
    for (const auto& row : kTransitionMatrix) sum += row[col];
    EXPECT_EQ(sum, 27) << col;
  }
}

TEST(TransitionMatrix, Transitions) {
  const auto& m = kTransitionMatrix;
  // all-different additions move C->A, A->B, B->C with weight 6
  EXPECT_EQ(m[kA][kC], 6);
  EXPECT_EQ(m[kB][kA], 6);
  EXPECT_EQ(m[kC][kB], 6);
  // same-letter additions keep A, B, C in place with weight 3
  for (auto k : {kA, kB, kC}) EXPECT_EQ(m[k][k], 3);
  for (std::size_t col = 0; col < 4; ++col) EXPECT_EQ(m[kD][col], 18);
  for (auto k : {kA, kB, kC}) EXPECT_EQ(m[k][kD], 3);
  EXPECT_EQ(m[kA][kB], 0);
  EXPECT_EQ(m[kB][kC], 0);
  EXPECT_EQ(m[kC][kA], 0);
}

TEST(Coupled, Examples) {
  const auto v1 = coupled_step(seed_vector());
  EXPECT_EQ(v1, (ClassVector{1, {3, 6, 0, 18}}));
  EXPECT_EQ(coupled_step(v1), (ClassVector{2, {63, 90, 90, 486}}));
  const auto seq0 = coupled_sequence(0);
  ASSERT_EQ(seq0.size(), 1u);
  EXPECT_EQ(seq0[0], seed_vector());
  EXPECT_EQ(coupled_sequence(3).back().c(), BigInt(2268));
  EXPECT_EQ(coupled_sequence(4).back().b(), BigInt(58806));
  EXPECT_EQ(coupled_at(4), coupled_sequence(4).back());
}

TEST(Coupled, MatchesFrozenValues) {
  const auto seq = coupled_sequence(40);
  for (const auto& row : kFrozen) {
    for (auto label : kAllClasses) {
      EXPECT_EQ(seq[row.n][label], BigInt::from_string(row.counts[index_of(label)]))
          << "n=" << row.n << " class " << to_char(label);
    }
  }
}

TEST(Decoupled, Examples) {
  EXPECT_EQ(decoupled_third_order(ClassLabel::A, 4), BigInt(59535));
  EXPECT_EQ(decoupled_third_order(ClassLabel::B, 3), BigInt(2106));
  EXPECT_EQ(decoupled_third_order(ClassLabel::C, 4), BigInt(58806));
  EXPECT_THROW(decoupled_third_order(ClassLabel::D, 4), DomainError);
  EXPECT_EQ(decoupled_D(0), BigInt());
  EXPECT_EQ(decoupled_D(1), BigInt(18));
  EXPECT_EQ(decoupled_D(2), BigInt(486));
}

TEST(Decoupled, ThirdOrderNeedsSeedThroughThree) {
  // The third-order recurrence fails at n = 3 for every class, so it must be
  // seeded with C(0..3).
  const auto seq = coupled_sequence(3);
  for (auto label : {ClassLabel::A, ClassLabel::B, ClassLabel::C}) {
    const BigInt predicted =
        BigInt(27) * (seq[2][label] - seq[1][label] + BigInt(27) * seq[0][label]);
    EXPECT_NE(predicted, seq[3][label]) << to_char(label);
  }
}

TEST(Quartic, Examples) {
  EXPECT_EQ(quartic_C(3), BigInt(2268));
  EXPECT_EQ(quartic_C(4), BigInt(58806));
  EXPECT_EQ(quartic_C(5), decoupled_third_order(ClassLabel::C, 5));
  EXPECT_EQ(quartic_C(5), composition_sum(5).c());
}

TEST(Quartic, DoesNotHoldAtFour) {
  // Starting the quartic at n = 4 from C_C(0) = 0 gives 58968, not 58806.
  const auto seq = coupled_sequence(4);
  const BigInt predicted = BigInt(26) * seq[3].c() + BigInt(702) * seq[1].c() + BigInt(729) * seq[0].c();
  EXPECT_EQ(predicted, BigInt(58968));
  EXPECT_EQ(quartic_C(4), seq[4].c());
}

TEST(Sequences, MatchPointEvaluation) {
  const auto a = decoupled_third_order_sequence(ClassLabel::A, 50);
  const auto d = decoupled_D_sequence(50);
  const auto q = quartic_C_sequence(50);
  for (std::uint64_t n = 0; n <= 50; ++n) {
    EXPECT_EQ(a[n], decoupled_third_order(ClassLabel::A, n));
    EXPECT_EQ(d[n], decoupled_D(n));
    EXPECT_EQ(q[n], quartic_C(n));
  }
}

TEST(CharPoly, Factorization) {
  EXPECT_TRUE(char_poly_check());
  const IntPolynomial quartic{-729, -702, 0, -26, 1};
  EXPECT_EQ(quartic.evaluate(BigInt(-1)), BigInt());
  const IntPolynomial cubic{-729, 27, -27, 1};
  EXPECT_EQ(cubic.evaluate(BigInt(27)), BigInt());
}

TEST(Identities, SuiteHoldsToTen) {
  const auto report = identity_suite(10);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.results.size(), 14u);
  for (const auto& r : report.results) EXPECT_GT(r.checked, 0u) << r.name;
  EXPECT_NO_THROW(report.throw_if_failed());
}

TEST(Identities, HandExampleAtTwo) {
  // C_D(2) - 3 C_C(2) = 486 - 270 = 216 = 9 (2*3 + 0 + 18)
  const auto v = coupled_sequence(2);
  EXPECT_EQ(v[2].d() - BigInt(3) * v[2].c(), BigInt(216));
  EXPECT_EQ(BigInt(9) * (BigInt(2) * v[1].a() + v[1].c() + v[1].d()), BigInt(216));
}

TEST(Identities, CorruptionIsCaught) {
  auto seq = coupled_sequence(10);
  seq[2].counts[kA] = BigInt(64);
  const auto report = check_identities(seq);
  EXPECT_FALSE(report.all_passed());
  try {
    report.throw_if_failed();
    FAIL() << "expected IdentityViolation";
  } catch (const IdentityViolation& e) {
    EXPECT_FALSE(e.identity().empty());
    EXPECT_LE(e.index(), 3);
  }
}

TEST(Identities, RequiresFourTerms) { EXPECT_THROW(identity_suite(3), DomainError); }

TEST(Engines, AgreeWithCompositionSum) {
  const auto seq = coupled_sequence(120);
  const auto qc = quartic_C_sequence(120);
  const auto dd = decoupled_D_sequence(120);
  for (std::uint64_t n = 0; n <= 120; n += (n < 20 ? 1 : 17)) {
    const auto ref = composition_sum(n);
    EXPECT_EQ(seq[n], ref) << n;
    for (auto label : {ClassLabel::A, ClassLabel::B, ClassLabel::C}) {
      EXPECT_EQ(decoupled_third_order(label, n), ref[label]) << n << to_char(label);
    }
    EXPECT_EQ(qc[n], ref.c()) << n;
    EXPECT_EQ(dd[n], ref.d()) << n;
  }
}

TEST(Relations, HoldWhereClaimed) {
  const auto seq = coupled_sequence(300);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto& v = seq[n];
    const BigInt abc = v.a() + v.b() + v.c();
    ASSERT_EQ(abc, pow3(3 * n - 1)) << n;
    ASSERT_EQ(v.d(), BigInt(2) * abc) << n;
    ASSERT_EQ(v.b() + v.c(), pow3(3 * n - 1) - v.a()) << n;
    if (n % 2 == 0) {
      ASSERT_EQ(v.b(), v.c()) << n;
    } else {
      ASSERT_EQ(v.b() + v.c(), BigInt(2) * pow3(3 * n - 2)) << n;
    }
  }
}

TEST(Relations, BPlusCFailsForEvenN) {
  const auto v = coupled_at(2);
  EXPECT_EQ(v.b() + v.c(), BigInt(180));
  EXPECT_EQ(BigInt(2) * pow3(4), BigInt(162));
}
