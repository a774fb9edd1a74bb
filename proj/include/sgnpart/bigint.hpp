#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgnpart/error.hpp"

namespace sgnpart {

// Arbitrary-precision signed integer with exact arithmetic throughout.
// The magnitude is kept little-endian in base 10^9 limbs; zero has no
// limbs and sign 0, so every value has exactly one representation.
class bigint {
 public:
  bigint() = default;

  bigint(std::int64_t v) {  // NOLINT: implicit on purpose, mirrors int literals
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on INT64_MIN
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                              : static_cast<std::uint64_t>(v);
    while (mag != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
      mag /= kBase;
    }
  }

  // Parses an optionally signed decimal literal.
  static bigint from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
    }
    if (pos == text.size())
      fail(errc::syntax_error, "expected decimal digits", pos);
    bigint out;
    for (; pos < text.size(); ++pos) {
      char ch = text[pos];
      if (ch < '0' || ch > '9')
        fail(errc::syntax_error, "invalid decimal digit", pos);
      out.mul_small_add(10, static_cast<std::uint32_t>(ch - '0'));
    }
    if (!out.limbs_.empty()) out.sign_ = sign;
    return out;
  }

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }

  bigint operator-() const {
    bigint out = *this;
    out.sign_ = -out.sign_;
    return out;
  }

  friend bigint operator+(const bigint& a, const bigint& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    bigint out;
    if (a.sign_ == b.sign_) {
      out.limbs_ = add_mag(a.limbs_, b.limbs_);
      out.sign_ = a.sign_;
      return out;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return out;
    const bigint& big = c > 0 ? a : b;
    const bigint& small = c > 0 ? b : a;
    out.limbs_ = sub_mag(big.limbs_, small.limbs_);
    out.sign_ = big.sign_;
    return out;
  }

  friend bigint operator-(const bigint& a, const bigint& b) { return a + (-b); }

  friend bigint operator*(const bigint& a, const bigint& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return bigint();
    bigint out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      std::uint64_t ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = out.limbs_[i + j] + ai * b.limbs_[j] + carry;
        out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry != 0) {
        std::uint64_t cur = out.limbs_[k] + carry;
        out.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
        ++k;
      }
    }
    out.trim();
    out.sign_ = a.sign_ * b.sign_;
    return out;
  }

  bigint& operator+=(const bigint& o) { return *this = *this + o; }
  bigint& operator-=(const bigint& o) { return *this = *this - o; }
  bigint& operator*=(const bigint& o) { return *this = *this * o; }

  // Quotient of |*this| / d with the sign of *this; d must be positive.
  // The remainder (taken on the magnitude) is stored in *rem if given.
  bigint div_small(std::uint32_t d, std::uint32_t* rem = nullptr) const {
    if (d == 0) fail(errc::out_of_range, "division by zero");
    bigint out;
    out.limbs_.assign(limbs_.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = r * kBase + limbs_[i];
      out.limbs_[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    out.trim();
    if (!out.limbs_.empty()) out.sign_ = sign_;
    if (rem) *rem = static_cast<std::uint32_t>(r);
    return out;
  }

  static bigint pow(const bigint& base, unsigned exp) {
    bigint out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
  }

  friend bool operator==(const bigint& a, const bigint& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }

  friend std::strong_ordering operator<=>(const bigint& a, const bigint& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.limbs_, b.limbs_) * a.sign_;
    return c <=> 0;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    if (sign_ < 0) out += '-';
    out += std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string limb = std::to_string(limbs_[i]);
      out.append(9 - limb.size(), '0');
      out += limb;
    }
    return out;
  }

  // Value as int64 when it fits; used by callers that proved smallness.
  std::int64_t to_int64() const {
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (mag > (UINT64_MAX - limbs_[i]) / kBase)
        fail(errc::out_of_range, "bigint does not fit in int64");
      mag = mag * kBase + limbs_[i];
    }
    std::uint64_t limit = static_cast<std::uint64_t>(INT64_MAX) +
                          (sign_ < 0 ? 1 : 0);
    if (mag > limit) fail(errc::out_of_range, "bigint does not fit in int64");
    return sign_ < 0 ? static_cast<std::int64_t>(~mag + 1)
                     : static_cast<std::int64_t>(mag);
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  // *this = |*this| * f + a, on the magnitude only (helper for parsing).
  void mul_small_add(std::uint32_t f, std::uint32_t a) {
    std::uint64_t carry = a;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    trim();
    if (!limbs_.empty() && sign_ == 0) sign_ = 1;
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
      out[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    if (carry != 0) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
  }

  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      out[i] = static_cast<std::uint32_t>(cur);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;
};

inline std::string to_string(const bigint& v) { return v.to_string(); }

}  // namespace sgnpart
