// SPDX-License-Identifier: Apache-2.0

#include "trinom/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "trinom/kernels.hpp"

namespace trinom {

using Limbs = std::vector<std::uint32_t>;

namespace {

constexpr std::uint64_t kLimbMask = 0xffffffffu;
constexpr std::uint32_t kDecimalChunk = 1'000'000'000u;
constexpr int kDecimalChunkDigits = 9;

void trim_limbs(Limbs& limbs) noexcept {
  while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
}

std::strong_ordering compare_magnitude(const Limbs& a, const Limbs& b) noexcept {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::uint32_t div_small_magnitude(Limbs& limbs, std::uint32_t divisor) noexcept {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs.size(); i-- > 0;) {
    const std::uint64_t cur = (rem << 32) | limbs[i];
    limbs[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim_limbs(limbs);
  return static_cast<std::uint32_t>(rem);
}

Limbs mul_magnitude(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  const Limbs& rows = a.size() <= b.size() ? a : b;
  const Limbs& wide = a.size() <= b.size() ? b : a;
  std::vector<std::uint64_t> acc(rows.size() + wide.size(), 0);
  const auto& k = kernels::active();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j] == 0) continue;
    k.mul_row(std::span(acc.data() + j, wide.size() + 1), wide, rows[j]);
  }
  Limbs out(acc.size());
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const std::uint64_t v = acc[i] + carry;
    out[i] = static_cast<std::uint32_t>(v & kLimbMask);
    carry = v >> 32;
  }
  trim_limbs(out);
  return out;
}

// Knuth algorithm D. Requires divisor.size() >= 2 and dividend >= divisor.
void divmod_magnitude(const Limbs& dividend, const Limbs& divisor, Limbs& quotient,
                      Limbs& remainder) {
  const std::size_t n = divisor.size();
  const std::size_t m = dividend.size() - n;
  const int shift = std::countl_zero(divisor.back());

  Limbs vn(n);
  for (std::size_t i = n - 1; i > 0; --i) {
    vn[i] = shift == 0 ? divisor[i]
                       : (divisor[i] << shift) | (divisor[i - 1] >> (32 - shift));
  }
  vn[0] = divisor[0] << shift;

  Limbs un(dividend.size() + 1);
  un[dividend.size()] = shift == 0 ? 0 : dividend.back() >> (32 - shift);
  for (std::size_t i = dividend.size() - 1; i > 0; --i) {
    un[i] = shift == 0 ? dividend[i]
                       : (dividend[i] << shift) | (dividend[i - 1] >> (32 - shift));
  }
  un[0] = dividend[0] << shift;

  quotient.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    const std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat > kLimbMask || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat > kLimbMask) break;
    }

    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      const std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                             static_cast<std::int64_t>(p & kLimbMask);
      un[i + j] = static_cast<std::uint32_t>(t);
      borrow = t < 0 ? 1 : 0;
    }
    const std::int64_t t =
        static_cast<std::int64_t>(un[j + n]) - borrow - static_cast<std::int64_t>(carry);
    un[j + n] = static_cast<std::uint32_t>(t);

    if (t < 0) {
      // qhat was one too large; add the divisor back
      --qhat;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
        un[i + j] = static_cast<std::uint32_t>(s & kLimbMask);
        c = s >> 32;
      }
      un[j + n] = static_cast<std::uint32_t>(un[j + n] + c);
    }
    quotient[j] = static_cast<std::uint32_t>(qhat);
  }

  remainder.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    remainder[i] = shift == 0 ? un[i] : (un[i] >> shift) | (un[i + 1] << (32 - shift));
  }
  trim_limbs(quotient);
  trim_limbs(remainder);
}

}  // namespace

struct BigIntAccess {
  static BigInt make(bool negative, Limbs limbs) {
    BigInt out;
    out.limbs_ = std::move(limbs);
    out.negative_ = negative;
    out.trim();
    return out;
  }
  static const Limbs& limbs(const BigInt& x) { return x.limbs_; }
};

BigInt::BigInt(std::int64_t value) {
  negative_ = value < 0;
  // magnitude without overflowing on INT64_MIN
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & kLimbMask));
    mag >>= 32;
  }
}

void BigInt::trim() noexcept {
  trim_limbs(limbs_);
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_string(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal integer");
  }
  BigInt out;
  std::size_t head = text.size() % kDecimalChunkDigits;
  if (head == 0) head = kDecimalChunkDigits;
  std::size_t pos = 0;
  std::size_t take = head;
  while (pos < text.size()) {
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      chunk = chunk * 10 + static_cast<std::uint32_t>(text[pos + i] - '0');
      scale *= 10;
    }
    out.mul_small(scale);
    out += BigInt(static_cast<std::int64_t>(chunk));
    pos += take;
    take = kDecimalChunkDigits;
  }
  out.negative_ = negative;
  out.trim();
  return out;
}

BigInt BigInt::pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result(1);
  BigInt square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  Limbs work = limbs_;
  std::vector<std::uint32_t> chunks;
  chunks.reserve(work.size() * 32 / 29 + 1);
  while (!work.empty()) chunks.push_back(div_small_magnitude(work, kDecimalChunk));

  std::string out;
  out.reserve(chunks.size() * kDecimalChunkDigits + 1);
  if (negative_) out.push_back('-');
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    const std::string part = std::to_string(chunks[i]);
    out.append(kDecimalChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::optional<std::int64_t> BigInt::to_int64() const noexcept {
  if (limbs_.size() > 2) return std::nullopt;
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  if (!negative_) {
    if (mag > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
    return static_cast<std::int64_t>(mag);
  }
  if (mag > static_cast<std::uint64_t>(INT64_MAX) + 1) return std::nullopt;
  return static_cast<std::int64_t>(~mag + 1);
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.negative_ = !out.negative_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.negative_ = false;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  *this = linear_combination({{1, this}, {1, &rhs}});
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  *this = linear_combination({{1, this}, {-1, &rhs}});
  return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  return BigIntAccess::make(lhs.negative_ != rhs.negative_,
                            mul_magnitude(lhs.limbs_, rhs.limbs_));
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  *this = *this * rhs;
  return *this;
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
  *this = divmod(*this, rhs).first;
  return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
  *this = divmod(*this, rhs).second;
  return *this;
}

BigInt& BigInt::mul_small(std::uint32_t factor) {
  if (factor == 0) {
    limbs_.clear();
    negative_ = false;
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    const std::uint64_t p = static_cast<std::uint64_t>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(p & kLimbMask);
    carry = p >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

std::uint32_t BigInt::div_small(std::uint32_t divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  const std::uint32_t rem = div_small_magnitude(limbs_, divisor);
  if (limbs_.empty()) negative_ = false;
  return rem;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) noexcept {
  if (lhs.negative_ != rhs.negative_) {
    return lhs.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const auto mag = compare_magnitude(lhs.limbs_, rhs.limbs_);
  if (lhs.negative_) return 0 <=> mag;
  return mag;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& dividend, const BigInt& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  if (compare_magnitude(dividend.limbs_, divisor.limbs_) < 0) return {BigInt(), dividend};

  const bool q_negative = dividend.negative_ != divisor.negative_;
  Limbs q;
  Limbs r;
  if (divisor.limbs_.size() == 1) {
    q = dividend.limbs_;
    const std::uint32_t rem = div_small_magnitude(q, divisor.limbs_[0]);
    if (rem != 0) r.push_back(rem);
  } else {
    divmod_magnitude(dividend.limbs_, divisor.limbs_, q, r);
  }
  return {BigIntAccess::make(q_negative, std::move(q)),
          BigIntAccess::make(dividend.negative_, std::move(r))};
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) { return os << value.to_string(); }

BigInt linear_combination(std::span<const ScaledTerm> terms) {
  std::uint64_t coeff_budget = 0;
  std::size_t width = 0;
  for (const auto& t : terms) {
    coeff_budget += static_cast<std::uint64_t>(std::abs(static_cast<std::int64_t>(t.coeff)));
    width = std::max(width, t.value->limbs().size());
  }
  if (coeff_budget >= (std::uint64_t{1} << 31)) {
    throw std::overflow_error("linear_combination: coefficient magnitudes too large");
  }

  // One spare limb for the coefficient growth (< 2^31) and one for the sign.
  std::vector<std::int64_t> acc(width + 2, 0);
  const auto& k = kernels::active();
  for (const auto& t : terms) {
    if (t.coeff == 0 || t.value->is_zero()) continue;
    const auto& x = BigIntAccess::limbs(*t.value);
    const std::int32_t c = t.value->is_negative() ? -t.coeff : t.coeff;
    k.scale_accumulate(std::span(acc.data(), x.size()), x, c);
  }

  Limbs out(acc.size());
  std::int64_t carry = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const std::int64_t v = acc[i] + carry;
    out[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) & kLimbMask);
    carry = v >> 32;
  }
  // The value fits in acc.size() limbs as two's complement, so carry is 0 or -1.
  const bool negative = carry < 0;
  if (negative) {
    std::uint64_t c = 1;
    for (auto& limb : out) {
      const std::uint64_t s = static_cast<std::uint64_t>(~limb) + c;
      limb = static_cast<std::uint32_t>(s & kLimbMask);
      c = s >> 32;
    }
  }
  return BigIntAccess::make(negative, std::move(out));
}

BigInt linear_combination(std::initializer_list<ScaledTerm> terms) {
  return linear_combination(std::span<const ScaledTerm>(terms.begin(), terms.size()));
}

}  // namespace trinom
