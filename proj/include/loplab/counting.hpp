#pragma once

#include <cstdint>
#include <optional>

#include "loplab/bignat.hpp"
#include "loplab/circuit.hpp"
#include "loplab/oracle.hpp"
#include "loplab/rational.hpp"

namespace loplab {

enum class Driver : std::uint8_t { Parallel, Binary };

inline const char* to_string(Driver d) {
  return d == Driver::Parallel ? "parallel" : "binary";
}

struct ApproxCountResult {
  BigNat t;
  std::uint64_t k = 1;
  /// Exponent i with (C^⊗k, 2^i) answered no and (C^⊗k, 2^{i-1}) answered
  /// yes (i = 1 leans on the (C, 1) probe). Absent when t = 0.
  std::optional<std::uint64_t> boundary_exponent;
  std::uint64_t queries_made = 0;
};

/// Largest integer t with t^k <= 2^i, by integer binary search.
inline BigNat floor_pow2_root(std::uint64_t i, std::uint64_t k) {
  if (k == 0) throw RejectedInputError("floor_pow2_root requires k >= 1");
  BigNat bound = BigNat::pow2(i);
  // t < 2^{i/k} + 1 <= 2^{i/k rounded up} + 1
  BigNat lo{1}, hi = BigNat::pow2(i / k + 1) + BigNat{1};
  // invariant: lo^k <= 2^i < hi^k
  while (hi - lo > BigNat{1}) {
    BigNat mid = (lo + hi) >> 1;
    if (BigNat::pow(mid, k) <= bound)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Approximate |C| through the SSE oracle with amplification power k:
/// the result t satisfies count <= t and t^k <= 4·count^k against every
/// oracle model, because each probe's single answer already forces the
/// needed inequality.
inline ApproxCountResult approx_count(const Circuit& c, std::uint64_t k,
                                      SseOracle& oracle, Driver driver) {
  if (k == 0) throw RejectedInputError("approx_count requires k >= 1");
  ApproxCountResult res;
  res.k = k;

  // (C, 1) is always inside the promise: count >= 1 forces yes, count = 0
  // forces no. Zero detection is therefore exact.
  res.queries_made = 1;
  if (!oracle.answer(SseQuery{AnyCircuit{c}, BigNat{1}})) {
    res.t = BigNat{};
    return res;
  }

  const std::uint64_t top = static_cast<std::uint64_t>(c.num_inputs()) * k + 1;
  TensorPower amplified(c, k);
  auto ask = [&](std::uint64_t j) {
    ++res.queries_made;
    return oracle.answer(SseQuery{AnyCircuit{amplified}, BigNat::pow2(j)});
  };

  std::uint64_t i = top;
  if (driver == Driver::Parallel) {
    // All nk+1 scan queries are issued; i is the smallest no-answered index.
    // (C^⊗k, 2^top) is a forced no since count <= 2^{nk}, so i is always set.
    bool found = false;
    for (std::uint64_t j = 1; j <= top; ++j) {
      bool yes = ask(j);
      if (!yes && !found) {
        i = j;
        found = true;
      }
    }
  } else {
    // lo carries a recorded yes (index 0 via the (C,1) probe: count >= 1
    // means count^k >= 2^0); hi = top needs no probe, it is a forced no.
    std::uint64_t lo = 0, hi = top;
    while (hi - lo > 1) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (ask(mid))
        lo = mid;
      else
        hi = mid;
    }
    i = hi;
  }

  res.boundary_exponent = i;
  res.t = floor_pow2_root(i, k);
  return res;
}

/// ceil(3/eps), computed on exact rationals.
inline std::uint64_t amplification_for_eps(const Rat& eps) {
  if (eps.is_zero()) throw RejectedInputError("eps must be positive");
  return Rat(BigNat(3) * eps.den(), eps.num()).ceil_u64();
}

/// Accuracy form of approx_count: k = ceil(3/eps) gives
/// count <= t <= 4^{eps/3}·count <= (1+eps)·count for eps <= 1.
inline ApproxCountResult approx_count_eps(const Circuit& c, const Rat& eps,
                                          SseOracle& oracle, Driver driver) {
  return approx_count(c, amplification_for_eps(eps), oracle, driver);
}

}  // namespace loplab
