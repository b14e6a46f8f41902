#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "loplab/errors.hpp"

namespace loplab {

/// Arbitrary-precision natural number (nonnegative). 32-bit limbs, little
/// endian, no trailing zero limbs. All counts, thresholds and soundness
/// checks run on these; no floating point anywhere in the library.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v) {  // NOLINT: implicit by design, mirrors int literals
    if (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
  }

  static BigNat pow2(std::uint64_t e) {
    BigNat r;
    r.limbs_.assign(e / 32 + 1, 0);
    r.limbs_.back() = std::uint32_t{1} << (e % 32);
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }

  bool fits_u64() const { return limbs_.size() <= 2; }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw RejectedInputError("BigNat does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  /// Number of bits; 0 for zero. bit_length(x) > j iff x >= 2^j ... iff
  /// x > 2^j - 1, so x >= 2^j iff bit_length(x) >= j + 1.
  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t b = 0;
    while (top) {
      ++b;
      top >>= 1;
    }
    return (limbs_.size() - 1) * 32 + b;
  }

  bool is_power_of_two() const {
    if (limbs_.empty()) return false;
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i)
      if (limbs_[i]) return false;
    std::uint32_t top = limbs_.back();
    return (top & (top - 1)) == 0;
  }

  bool bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
  }

  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  /// -1, 0, +1 for a < b, a == b, a > b.
  static int cmp(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const BigNat& a, const BigNat& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigNat& a, const BigNat& b) { return !(a == b); }
  friend bool operator<(const BigNat& a, const BigNat& b) {
    return cmp(a, b) < 0;
  }
  friend bool operator<=(const BigNat& a, const BigNat& b) {
    return cmp(a, b) <= 0;
  }
  friend bool operator>(const BigNat& a, const BigNat& b) {
    return cmp(a, b) > 0;
  }
  friend bool operator>=(const BigNat& a, const BigNat& b) {
    return cmp(a, b) >= 0;
  }

  friend BigNat operator+(const BigNat& a, const BigNat& b) {
    BigNat r;
    const auto &x = a.limbs_, &y = b.limbs_;
    std::size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = carry;
      if (i < x.size()) s += x[i];
      if (i < y.size()) s += y[i];
      r.limbs_[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  /// Requires a >= b.
  friend BigNat operator-(const BigNat& a, const BigNat& b) {
    if (a < b) throw RejectedInputError("BigNat subtraction would underflow");
    BigNat r;
    r.limbs_.resize(a.limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                       (i < b.limbs_.size() ? b.limbs_[i] : 0);
      borrow = 0;
      if (d < 0) {
        d += std::int64_t{1} << 32;
        borrow = 1;
      }
      r.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    r.trim();
    return r;
  }

  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return BigNat{};
    BigNat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      std::uint64_t ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry) {
        std::uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  friend BigNat operator<<(const BigNat& a, std::uint64_t s) {
    if (a.is_zero()) return BigNat{};
    BigNat r;
    std::size_t limb_shift = s / 32, bit_shift = s % 32;
    r.limbs_.assign(a.limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t v = static_cast<std::uint64_t>(a.limbs_[i]) << bit_shift;
      r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v);
      r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    r.trim();
    return r;
  }

  friend BigNat operator>>(const BigNat& a, std::uint64_t s) {
    std::size_t limb_shift = s / 32, bit_shift = s % 32;
    if (limb_shift >= a.limbs_.size()) return BigNat{};
    BigNat r;
    r.limbs_.assign(a.limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
      std::uint64_t v = a.limbs_[i + limb_shift];
      if (bit_shift) {
        v >>= bit_shift;
        if (i + limb_shift + 1 < a.limbs_.size())
          v |= static_cast<std::uint64_t>(a.limbs_[i + limb_shift + 1])
               << (32 - bit_shift);
      }
      r.limbs_[i] = static_cast<std::uint32_t>(v);
    }
    r.trim();
    return r;
  }

  static BigNat pow(const BigNat& base, std::uint64_t e) {
    BigNat result{1};
    BigNat b = base;
    while (e) {
      if (e & 1) result = result * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return result;
  }

  /// Quotient and remainder; shift-and-subtract long division.
  static std::pair<BigNat, BigNat> divmod(const BigNat& a, const BigNat& b) {
    if (b.is_zero()) throw RejectedInputError("BigNat division by zero");
    if (a < b) return {BigNat{}, a};
    std::size_t shift = a.bit_length() - b.bit_length();
    BigNat rem = a, q;
    q.limbs_.assign(shift / 32 + 1, 0);
    BigNat d = b << shift;
    for (std::size_t i = shift + 1; i-- > 0;) {
      if (rem >= d) {
        rem = rem - d;
        q.limbs_[i / 32] |= std::uint32_t{1} << (i % 32);
      }
      d = d >> 1;
    }
    q.trim();
    return {q, rem};
  }

  static BigNat gcd(BigNat a, BigNat b) {
    // binary gcd: division-free
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint64_t shift = 0;
    while (a.is_even() && b.is_even()) {
      a = a >> 1;
      b = b >> 1;
      ++shift;
    }
    while (a.is_even()) a = a >> 1;
    while (!b.is_zero()) {
      while (b.is_even()) b = b >> 1;
      if (a > b) std::swap(a, b);
      b = b - a;
    }
    return a << shift;
  }

  std::string to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      for (int d = 0; d < 9; ++d) {
        out.push_back(char('0' + rem % 10));
        rem /= 10;
      }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace loplab
