#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "loplab/bignat.hpp"
#include "loplab/errors.hpp"

namespace loplab {

/// Exact nonnegative rational. Not kept reduced; comparisons cross-multiply,
/// so reduction only matters for printing.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(BigNat num, BigNat den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw RejectedInputError("rational with zero denominator");
  }
  Rat(std::uint64_t num, std::uint64_t den) : Rat(BigNat(num), BigNat(den)) {}

  const BigNat& num() const { return num_; }
  const BigNat& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  static int cmp(const Rat& a, const Rat& b) {
    return BigNat::cmp(a.num_ * b.den_, b.num_ * a.den_);
  }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

  Rat reduced() const {
    if (num_.is_zero()) return Rat{};
    BigNat g = BigNat::gcd(num_, den_);
    return Rat(BigNat::divmod(num_, g).first, BigNat::divmod(den_, g).first);
  }

  /// ceil(num/den); denominator must divide into something positive.
  std::uint64_t ceil_u64() const {
    auto [q, r] = BigNat::divmod(num_, den_);
    BigNat c = r.is_zero() ? q : q + BigNat(1);
    return c.to_u64();
  }

  /// "p/q" in lowest terms, or "p" when q == 1.
  std::string to_string() const {
    Rat r = reduced();
    if (r.den_ == BigNat(1)) return r.num_.to_decimal();
    return r.num_.to_decimal() + "/" + r.den_.to_decimal();
  }

  /// Parses "p" or "p/q" with 64-bit components.
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos)
        return Rat(BigNat(std::stoull(s)), BigNat(1));
      std::uint64_t p = std::stoull(s.substr(0, slash));
      std::uint64_t q = std::stoull(s.substr(slash + 1));
      if (q == 0) throw RejectedInputError("rational with zero denominator");
      return Rat(BigNat(p), BigNat(q));
    } catch (const std::invalid_argument&) {
      throw RejectedInputError("cannot parse rational: " + s);
    } catch (const std::out_of_range&) {
      throw RejectedInputError("rational component out of range: " + s);
    }
  }

 private:
  BigNat num_, den_;
};

}  // namespace loplab
