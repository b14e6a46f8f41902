#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "loplab/errors.hpp"

namespace loplab {

/// Fixed-length bit string. Position 0 is the most significant bit, so the
/// integer value of "10" is 2 and enumeration by index agrees with
/// lexicographic order on the strings.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n) : bits_(n, 0) {}

  static BitString from_string(std::string_view s) {
    BitString b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw RejectedInputError("bit string must consist of 0/1 characters");
      b.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return b;
  }

  static BitString from_index(std::uint64_t value, std::size_t n) {
    BitString b(n);
    for (std::size_t i = 0; i < n; ++i)
      b.bits_[i] = static_cast<std::uint8_t>((value >> (n - 1 - i)) & 1u);
    return b;
  }

  std::uint64_t to_index() const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) v = (v << 1) | bits_[i];
    return v;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = char('0' + bits_[i]);
    return s;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, std::uint8_t v) { bits_[i] = v ? 1 : 0; }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  BitString prefix(std::size_t len) const {
    BitString b(len);
    for (std::size_t i = 0; i < len; ++i) b.bits_[i] = bits_[i];
    return b;
  }

  BitString suffix(std::size_t start) const {
    BitString b(bits_.size() - start);
    for (std::size_t i = start; i < bits_.size(); ++i)
      b.bits_[i - start] = bits_[i];
    return b;
  }

  friend BitString operator+(const BitString& a, const BitString& b) {
    BitString r(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.bits_[i] = a.bits_[i];
    for (std::size_t i = 0; i < b.size(); ++i) r.bits_[a.size() + i] = b.bits_[i];
    return r;
  }

  friend bool operator==(const BitString& a, const BitString& b) = default;
  friend bool operator<(const BitString& a, const BitString& b) {
    return a.bits_ < b.bits_;  // lexicographic, sizes equal in practice
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/// splitmix64; used for all seeded randomness so runs replay across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound > 0. Multiply-shift reduction.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  bool next_bit() { return (next() >> 63) != 0; }

  BitString next_bits(std::size_t n) {
    BitString b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, next_bit());
    return b;
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a over bytes, 64-bit. Part of the published query-hash definition.
inline std::uint64_t fnv1a64(std::string_view data,
                             std::uint64_t h = 0xCBF29CE484222325ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

/// Final mixing step for seeded oracle answers: splitmix64 finalizer applied
/// to hash ^ (seed * golden gamma).
inline std::uint64_t mix_hash_seed(std::uint64_t hash, std::uint64_t seed) {
  std::uint64_t z = hash ^ (seed * 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace loplab
