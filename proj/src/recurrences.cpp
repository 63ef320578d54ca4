// SPDX-License-Identifier: Apache-2.0

#include "trinom/recurrences.hpp"

#include <algorithm>
#include <utility>

#include "trinom/errors.hpp"
#include "trinom/polynomial.hpp"

namespace trinom {
namespace {

// x(n) = sum_k lag_coeffs[k] * x(n-1-k). `window` holds the most recent
// values, oldest first, and is shifted in place.
template <std::size_t Order>
void advance(std::array<BigInt, Order>& window, const std::array<std::int32_t, Order>& lag_coeffs) {
  std::array<ScaledTerm, Order> terms{};
  for (std::size_t k = 0; k < Order; ++k) {
    terms[k] = {lag_coeffs[k], &window[Order - 1 - k]};
  }
  BigInt next = linear_combination(terms);
  std::rotate(window.begin(), window.begin() + 1, window.end());
  window.back() = std::move(next);
}

constexpr std::array<std::int32_t, 3> kThirdOrderLags{27, -27, 729};
constexpr std::array<std::int32_t, 4> kQuarticLags{26, 0, 702, 729};

std::array<BigInt, 4> third_order_seed(ClassLabel label) {
  switch (label) {
    case ClassLabel::A:
      return {1, 3, 63, 2187};
    case ClassLabel::B:
      return {0, 6, 90, 2106};
    case ClassLabel::C:
      return {0, 0, 90, 2268};
    case ClassLabel::D:
      break;
  }
  throw DomainError("decoupled_third_order: class D follows the first-order recurrence");
}

const std::array<BigInt, 5>& quartic_seed() {
  static const std::array<BigInt, 5> seed{0, 0, 90, 2268, 58806};
  return seed;
}

// Zero-sum linear identity: sum coeff * C_cls(n + offset) = 0.
struct IdentityTerm {
  std::int32_t coeff;
  ClassLabel cls;
  int offset;
};

struct IdentitySpec {
  const char* name;
  const char* formula;
  std::int64_t min_n;  // smallest n at which the identity is claimed
  std::vector<IdentityTerm> terms;
};

const std::vector<IdentitySpec>& identity_specs() {
  using enum ClassLabel;
  static const std::vector<IdentitySpec> specs{
      {"d-from-b-row", "3 C_D(n-1) = C_B(n) - 3 C_B(n-1) - 6 C_A(n-1)", 1,
       {{3, D, -1}, {-1, B, 0}, {3, B, -1}, {6, A, -1}}},
      {"c-from-a-b", "54 C_C(n) = -6 C_A(n+1) + 54 C_A(n) - 21 C_B(n+1) + C_B(n+2)", 0,
       {{54, C, 0}, {6, A, 1}, {-54, A, 0}, {21, B, 1}, {-1, B, 2}}},
      {"c-row-a-b", "6 C_A(n-1) - C_B(n) - 3 C_B(n-1) + C_C(n) - 3 C_C(n-1) = 0", 1,
       {{6, A, -1}, {-1, B, 0}, {-3, B, -1}, {1, C, 0}, {-3, C, -1}}},
      {"a-b-coupled-1",
       "6 C_A(n+1) - 72 C_A(n) - 162 C_A(n-1) - C_B(n+2) + 24 C_B(n+1) - 9 C_B(n) + 162 C_B(n-1) = 0",
       1,
       {{6, A, 1}, {-72, A, 0}, {-162, A, -1}, {-1, B, 2}, {24, B, 1}, {-9, B, 0}, {162, B, -1}}},
      {"a-row-b", "C_A(n) + 3 C_A(n-1) - C_B(n) + 3 C_B(n-1) - 6 C_C(n-1) = 0", 1,
       {{1, A, 0}, {3, A, -1}, {-1, B, 0}, {3, B, -1}, {-6, C, -1}}},
      {"a-b-coupled-2", "15 C_A(n) - 27 C_A(n-1) - C_B(n+1) + 12 C_B(n) + 27 C_B(n-1) = 0", 1,
       {{15, A, 0}, {-27, A, -1}, {-1, B, 1}, {12, B, 0}, {27, B, -1}}},
      {"d-minus-3c", "C_D(n) - 3 C_C(n) = 9 (2 C_A(n-1) + C_C(n-1) + C_D(n-1))", 1,
       {{1, D, 0}, {-3, C, 0}, {-18, A, -1}, {-9, C, -1}, {-9, D, -1}}},
      {"c-d-coupled-1", "3 C_C(n+1) + 81 C_C(n-1) - C_D(n+1) + 12 C_D(n) + 27 C_D(n-1) = 0", 1,
       {{3, C, 1}, {81, C, -1}, {-1, D, 1}, {12, D, 0}, {27, D, -1}}},
      {"c-d-coupled-2", "C_C(n+1) + 27 C_C(n-1) - 5 C_D(n) + 9 C_D(n-1) = 0", 1,
       {{1, C, 1}, {27, C, -1}, {-5, D, 0}, {9, D, -1}}},
      {"a-third-order", "C_A(n) = 27 (C_A(n-1) - C_A(n-2) + 27 C_A(n-3)), n >= 4", 4,
       {{1, A, 0}, {-27, A, -1}, {27, A, -2}, {-729, A, -3}}},
      {"b-third-order", "C_B(n) = 27 (C_B(n-1) - C_B(n-2) + 27 C_B(n-3)), n >= 4", 4,
       {{1, B, 0}, {-27, B, -1}, {27, B, -2}, {-729, B, -3}}},
      {"c-third-order", "C_C(n) = 27 (C_C(n-1) - C_C(n-2) + 27 C_C(n-3)), n >= 4", 4,
       {{1, C, 0}, {-27, C, -1}, {27, C, -2}, {-729, C, -3}}},
      {"d-geometric", "C_D(n) = 27 C_D(n-1), n >= 2", 2, {{1, D, 0}, {-27, D, -1}}},
      {"c-quartic", "C_C(n) = 26 C_C(n-1) + 702 C_C(n-3) + 729 C_C(n-4), n >= 5", 5,
       {{1, C, 0}, {-26, C, -1}, {-702, C, -3}, {-729, C, -4}}},
  };
  return specs;
}

}  // namespace

ClassVector seed_vector() {
  ClassVector v;
  v.n = 0;
  v.counts = {1, 0, 0, 0};
  return v;
}

ClassVector coupled_step(const ClassVector& v) {
  ClassVector out;
  out.n = v.n + 1;
  for (std::size_t row = 0; row < 4; ++row) {
    const auto& m = kTransitionMatrix[row];
    out.counts[row] = linear_combination({{m[0], &v.counts[0]},
                                          {m[1], &v.counts[1]},
                                          {m[2], &v.counts[2]},
                                          {m[3], &v.counts[3]}});
  }
  return out;
}

std::vector<ClassVector> coupled_sequence(std::uint64_t max_n) {
  std::vector<ClassVector> seq;
  seq.reserve(max_n + 1);
  seq.push_back(seed_vector());
  for (std::uint64_t n = 1; n <= max_n; ++n) seq.push_back(coupled_step(seq.back()));
  return seq;
}

ClassVector coupled_at(std::uint64_t n) {
  ClassVector v = seed_vector();
  for (std::uint64_t k = 0; k < n; ++k) v = coupled_step(v);
  return v;
}

BigInt decoupled_third_order(ClassLabel label, std::uint64_t n) {
  const auto seed = third_order_seed(label);
  if (n <= 3) return seed[n];
  std::array<BigInt, 3> window{seed[1], seed[2], seed[3]};
  for (std::uint64_t k = 4; k <= n; ++k) advance(window, kThirdOrderLags);
  return window.back();
}

std::vector<BigInt> decoupled_third_order_sequence(ClassLabel label, std::uint64_t max_n) {
  const auto seed = third_order_seed(label);
  std::vector<BigInt> out;
  out.reserve(max_n + 1);
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    if (n <= 3) {
      out.push_back(seed[n]);
    } else {
      out.push_back(linear_combination({{27, &out[n - 1]}, {-27, &out[n - 2]}, {729, &out[n - 3]}}));
    }
  }
  return out;
}

BigInt decoupled_D(std::uint64_t n) {
  if (n == 0) return BigInt();
  BigInt v(18);
  for (std::uint64_t k = 2; k <= n; ++k) v.mul_small(27);
  return v;
}

std::vector<BigInt> decoupled_D_sequence(std::uint64_t max_n) {
  std::vector<BigInt> out;
  out.reserve(max_n + 1);
  out.emplace_back();
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (n == 1) {
      out.emplace_back(18);
    } else {
      BigInt next = out.back();
      out.push_back(std::move(next.mul_small(27)));
    }
  }
  return out;
}

BigInt quartic_C(std::uint64_t n) {
  const auto& seed = quartic_seed();
  if (n <= 4) return seed[n];
  std::array<BigInt, 4> window{seed[1], seed[2], seed[3], seed[4]};
  for (std::uint64_t k = 5; k <= n; ++k) advance(window, kQuarticLags);
  return window.back();
}

std::vector<BigInt> quartic_C_sequence(std::uint64_t max_n) {
  const auto& seed = quartic_seed();
  std::vector<BigInt> out;
  out.reserve(max_n + 1);
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    if (n <= 4) {
      out.push_back(seed[n]);
    } else {
      out.push_back(
          linear_combination({{26, &out[n - 1]}, {702, &out[n - 3]}, {729, &out[n - 4]}}));
    }
  }
  return out;
}

bool char_poly_check() {
  const IntPolynomial quartic{-729, -702, 0, -26, 1};
  const IntPolynomial cubic = IntPolynomial::monomial(1, 3) - IntPolynomial{27} * IntPolynomial{27, -1, 1};
  const IntPolynomial linear{1, 1};
  return linear * cubic == quartic;
}

bool IdentityReport::all_passed() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

void IdentityReport::throw_if_failed() const {
  for (const auto& r : results) {
    if (!r.passed()) throw IdentityViolation(r.name, static_cast<std::int64_t>(*r.first_failure));
  }
}

IdentityReport check_identities(std::span<const ClassVector> seq) {
  IdentityReport report;
  const auto last = static_cast<std::int64_t>(seq.size()) - 1;
  for (const auto& spec : identity_specs()) {
    int min_offset = 0;
    int max_offset = 0;
    for (const auto& t : spec.terms) {
      min_offset = std::min(min_offset, t.offset);
      max_offset = std::max(max_offset, t.offset);
    }
    IdentityResult result{spec.name, spec.formula, 0, 0, 0, std::nullopt};
    const std::int64_t lo = std::max<std::int64_t>(spec.min_n, -min_offset);
    const std::int64_t hi = last - max_offset;
    result.first_n = static_cast<std::uint64_t>(lo);
    std::vector<ScaledTerm> terms(spec.terms.size());
    for (std::int64_t n = lo; n <= hi; ++n) {
      for (std::size_t k = 0; k < spec.terms.size(); ++k) {
        const auto& t = spec.terms[k];
        terms[k] = {t.coeff, &seq[static_cast<std::size_t>(n + t.offset)][t.cls]};
      }
      ++result.checked;
      result.last_n = static_cast<std::uint64_t>(n);
      if (!linear_combination(terms).is_zero() && !result.first_failure) {
        result.first_failure = static_cast<std::uint64_t>(n);
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

IdentityReport identity_suite(std::uint64_t max_n) {
  if (max_n < 4) throw DomainError("identity_suite: max_n must be at least 4");
  const auto seq = coupled_sequence(max_n);
  return check_identities(seq);
}

}  // namespace trinom
