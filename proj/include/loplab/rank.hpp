#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loplab/bignat.hpp"
#include "loplab/circuit.hpp"
#include "loplab/counting.hpp"
#include "loplab/errors.hpp"
#include "loplab/oracle.hpp"
#include "loplab/rational.hpp"

namespace loplab {

/// Verdict of the linear-order check. A Pair witnesses x < y < x (x = y
/// covers reflexivity), a Triple witnesses x < y < z < x, and NonTotal
/// witnesses x != y with neither x < y nor y < x. The last form is outside
/// the classical counterexample grammar but unavoidable for relations like
/// the empty one.
struct OrderVerdict {
  enum class Kind : std::uint8_t { Valid, Pair, Triple, NonTotal };
  Kind kind = Kind::Valid;
  BitString x, y, z;

  bool valid() const { return kind == Kind::Valid; }

  static OrderVerdict ok() { return {}; }
  static OrderVerdict pair(BitString a, BitString b) {
    return {Kind::Pair, std::move(a), std::move(b), {}};
  }
  static OrderVerdict triple(BitString a, BitString b, BitString c) {
    return {Kind::Triple, std::move(a), std::move(b), std::move(c)};
  }
  static OrderVerdict non_total(BitString a, BitString b) {
    return {Kind::NonTotal, std::move(a), std::move(b), {}};
  }

  friend bool operator==(const OrderVerdict&, const OrderVerdict&) = default;
};

inline const char* to_string(OrderVerdict::Kind k) {
  switch (k) {
    case OrderVerdict::Kind::Valid: return "VALID";
    case OrderVerdict::Kind::Pair: return "pair";
    case OrderVerdict::Kind::Triple: return "triple";
    default: return "non_total";
  }
}

/// Re-evaluates a counterexample against E; every verdict returned by
/// check_order passes this.
inline bool verify_verdict(const OrderCircuit& e, const OrderVerdict& v) {
  switch (v.kind) {
    case OrderVerdict::Kind::Valid: return true;
    case OrderVerdict::Kind::Pair: return e.less(v.x, v.y) && e.less(v.y, v.x);
    case OrderVerdict::Kind::Triple:
      return e.less(v.x, v.y) && e.less(v.y, v.z) && e.less(v.z, v.x);
    case OrderVerdict::Kind::NonTotal:
      return v.x != v.y && !e.less(v.x, v.y) && !e.less(v.y, v.x);
  }
  return false;
}

/// rank(alpha) = |{x : x < alpha}| by enumeration.
inline std::uint64_t rank_exact(const OrderCircuit& e, const BitString& alpha,
                                unsigned cap = kDefaultBruteForceCap) {
  return build_strictly_below(e, alpha).count(cap).to_u64();
}

/// Exact average order rank of the non-empty set {x : c(x) = 1}.
inline Rat rank_set_exact(const OrderCircuit& e, const Circuit& c,
                          unsigned cap = kDefaultBruteForceCap) {
  if (c.num_inputs() != e.n())
    throw RejectedInputError("set circuit arity does not match order n");
  const unsigned n = e.n();
  if (n > cap)
    throw CapacityError("exact rank at n = " + std::to_string(n) +
                        " exceeds the brute-force limit " + std::to_string(cap));
  std::vector<std::uint64_t> members = c.eval_all();
  std::uint64_t size = 0, sum = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if ((members[v >> 6] >> (v & 63)) & 1) {
      ++size;
      sum += rank_exact(e, BitString::from_index(v, n), cap);
    }
  }
  if (size == 0) throw RejectedInputError("rank of the empty set is undefined");
  return Rat(BigNat(sum), BigNat(size));
}

/// Oracle-estimated average order rank: the exact rational t_D / t_C with
/// both counts obtained through approx_count at amplification k = ceil(1/eps),
/// so that 4^{-eps}·rank(C) <= t_D/t_C <= 4^{eps}·rank(C).
struct RankEstimate {
  BigNat t_d;  // pair-count estimate (numerator)
  BigNat t_c;  // set-count estimate (denominator, >= 1 for non-empty sets)
  std::uint64_t k = 1;
  std::uint64_t queries_made = 0;

  bool is_zero() const { return t_d.is_zero(); }
  Rat value() const { return Rat(t_d, t_c); }
};

inline RankEstimate rank_estimate(const Circuit& c, const OrderCircuit& e,
                                  const Rat& eps, SseOracle& oracle,
                                  Driver driver) {
  if (eps.is_zero()) throw RejectedInputError("eps must be positive");
  std::uint64_t k = Rat(eps.den(), eps.num()).ceil_u64();  // ceil(1/eps)
  ApproxCountResult set_count = approx_count(c, k, oracle, driver);
  if (set_count.t.is_zero())
    throw RejectedInputError("rank_estimate requires a non-empty set");
  ApproxCountResult pair_count =
      approx_count(build_rank_pairs(c, e), k, oracle, driver);
  return RankEstimate{pair_count.t, set_count.t, k,
                      set_count.queries_made + pair_count.queries_made};
}

/// Decides whether E is a strict linear order on {0,1}^n, in O(4^n) via
/// score sequences. On failure extracts a verified counterexample: first a
/// reflexive or mutual edge or a totality gap, then for a proper tournament
/// with a bad score sequence an edge (a, b) with a < b and
/// rank(a) >= rank(b), from which a 3-cycle a < b < z < a follows by a
/// counting argument.
inline OrderVerdict check_order(const OrderCircuit& e,
                                unsigned cap = kDefaultBruteForceCap) {
  const unsigned n = e.n();
  if (2 * n > cap)
    throw CapacityError("order check at n = " + std::to_string(n) +
                        " needs 2n <= brute-force limit " +
                        std::to_string(cap));
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> table = e.circuit().eval_all();
  auto rel = [&](std::uint64_t x, std::uint64_t y) -> bool {
    std::uint64_t idx = (x << n) | y;
    return (table[idx >> 6] >> (idx & 63)) & 1;
  };
  auto str = [&](std::uint64_t v) { return BitString::from_index(v, n); };

  for (std::uint64_t x = 0; x < size; ++x)
    if (rel(x, x)) return OrderVerdict::pair(str(x), str(x));

  std::vector<std::uint64_t> rank(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t y = x + 1; y < size; ++y) {
      bool xy = rel(x, y), yx = rel(y, x);
      if (xy && yx) return OrderVerdict::pair(str(x), str(y));
      if (!xy && !yx) return OrderVerdict::non_total(str(x), str(y));
      ++rank[xy ? y : x];
    }
  }

  std::vector<bool> seen(size, false);
  bool valid = true;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (seen[rank[x]]) {
      valid = false;
      break;
    }
    seen[rank[x]] = true;
  }
  if (valid) return OrderVerdict::ok();

  // Proper tournament, scores not a permutation: some edge fails to
  // increase rank strictly, and a 3-cycle through it must exist.
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      if (a == b || !rel(a, b) || rank[a] < rank[b]) continue;
      for (std::uint64_t zz = 0; zz < size; ++zz) {
        if (zz == a || zz == b) continue;
        if (rel(b, zz) && rel(zz, a))
          return OrderVerdict::triple(str(a), str(b), str(zz));
      }
    }
  }
  throw DefectError("score sequence is bad but no 3-cycle was found");
}

}  // namespace loplab
