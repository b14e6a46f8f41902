#pragma once

// Brute-force reference oracles for the test suite. Everything here uses
// plain single-assignment evaluation loops, independent of the library's
// word-parallel counting and score-sequence paths it cross-checks.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loplab/loplab.hpp"

namespace loplab::testing {

/// Exact count by enumerating assignments one by one through eval().
inline std::uint64_t brute_count(const Circuit& c) {
  const unsigned n = c.num_inputs();
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    count += c.eval(BitString::from_index(v, n)) ? 1 : 0;
  return count;
}

/// Explicit product circuit over k disjoint input copies; the independent
/// route for the tensor counting identity.
inline Circuit expand_tensor(const Circuit& base, unsigned k) {
  const unsigned n = base.num_inputs();
  CircuitBuilder b(n * k);
  std::vector<std::uint32_t> outs;
  for (unsigned copy = 0; copy < k; ++copy) {
    outs.push_back(b.append(base, [&](std::uint32_t j) {
      return Gate{GateKind::Input, copy * n + j, 0};
    }));
  }
  return b.build(b.and_tree(outs));
}

inline std::uint64_t brute_rank(const OrderCircuit& e, const BitString& alpha) {
  const unsigned n = e.n();
  std::uint64_t r = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    r += e.less(BitString::from_index(v, n), alpha) ? 1 : 0;
  return r;
}

/// The unique x with x < y for all y != x, if one exists.
inline std::optional<BitString> brute_argmin(const OrderCircuit& e) {
  const unsigned n = e.n();
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < size; ++x) {
    BitString xs = BitString::from_index(x, n);
    bool is_min = true;
    for (std::uint64_t y = 0; y < size && is_min; ++y)
      if (y != x && !e.less(xs, BitString::from_index(y, n))) is_min = false;
    if (is_min) return xs;
  }
  return std::nullopt;
}

/// Direct pair + triple scan of the order axioms; O(8^n), for n <= 4.
inline bool brute_is_linear_order(const OrderCircuit& e) {
  const unsigned n = e.n();
  const std::uint64_t size = std::uint64_t{1} << n;
  auto bs = [&](std::uint64_t v) { return BitString::from_index(v, n); };
  for (std::uint64_t x = 0; x < size; ++x)
    if (e.less(bs(x), bs(x))) return false;
  for (std::uint64_t x = 0; x < size; ++x)
    for (std::uint64_t y = x + 1; y < size; ++y) {
      bool xy = e.less(bs(x), bs(y)), yx = e.less(bs(y), bs(x));
      if (xy == yx) return false;  // mutual or missing
    }
  for (std::uint64_t x = 0; x < size; ++x)
    for (std::uint64_t y = 0; y < size; ++y)
      for (std::uint64_t z = 0; z < size; ++z) {
        if (x == y || y == z || x == z) continue;
        if (e.less(bs(x), bs(y)) && e.less(bs(y), bs(z)) &&
            e.less(bs(z), bs(x)))
          return false;
      }
  return true;
}

/// Order circuit realizing an arbitrary relation given as a truth table
/// rel[x][y]; a plain DNF over the accepted pairs.
inline OrderCircuit order_from_table(
    unsigned n, const std::vector<std::vector<bool>>& rel) {
  CircuitBuilder b(2 * n);
  std::optional<std::uint32_t> out;
  for (std::uint64_t x = 0; x < rel.size(); ++x)
    for (std::uint64_t y = 0; y < rel[x].size(); ++y) {
      if (!rel[x][y]) continue;
      std::uint32_t ex = b.equals_constant(BitString::from_index(x, n), 0);
      std::uint32_t ey = b.equals_constant(BitString::from_index(y, n), n);
      std::uint32_t term = b.and_gate(ex, ey);
      out = out ? b.or_gate(*out, term) : term;
    }
  if (!out) out = b.constant(false);
  return OrderCircuit(n, b.build(*out));
}

struct NamedOracle {
  std::string name;
  std::unique_ptr<SseOracle> oracle;
};

/// The full model roster used across soundness tests: the threshold
/// language, four adversary policies across seeds, and the memoizing
/// wrapper around the inconsistent alternator.
inline std::vector<NamedOracle> all_models(
    unsigned cap = kDefaultBruteForceCap,
    const std::vector<std::uint64_t>& seeds = {1, 2, 3, 4, 5}) {
  std::vector<NamedOracle> models;
  models.push_back({"threshold", std::make_unique<ThresholdOracle>(cap)});
  for (GapPolicy p : {GapPolicy::AlwaysYes, GapPolicy::AlwaysNo,
                      GapPolicy::SeededHash, GapPolicy::Alternating}) {
    for (std::uint64_t s : seeds) {
      models.push_back(
          {std::string(to_string(p)) + "/" + std::to_string(s),
           std::make_unique<AdversarialOracle>(p, s, cap)});
    }
  }
  models.push_back(
      {"memo(alternating)",
       std::make_unique<MemoizingOracle>(std::make_unique<AdversarialOracle>(
           GapPolicy::Alternating, 0, cap))});
  return models;
}

/// count <= t and t^k <= 4 * count^k, in exact integers.
inline bool approx_count_sound(const BigNat& count, const BigNat& t,
                               std::uint64_t k) {
  return count <= t &&
         BigNat::pow(t, k) <= BigNat(4) * BigNat::pow(count, k);
}

/// t <= (1 + eps) * count, cross-multiplied.
inline bool within_one_plus_eps(const BigNat& count, const BigNat& t,
                                const Rat& eps) {
  return t * eps.den() <= count * (eps.den() + eps.num());
}

/// Exact k-th-power forms of 4^{-1/k} * rank <= t_d/t_c <= 4^{1/k} * rank,
/// with rank = rank_num / rank_den.
inline bool rank_estimate_sound(const RankEstimate& est, const BigNat& rank_num,
                                const BigNat& rank_den) {
  BigNat four{4};
  bool upper = BigNat::pow(est.t_d, est.k) * BigNat::pow(rank_den, est.k) <=
               four * BigNat::pow(est.t_c, est.k) * BigNat::pow(rank_num, est.k);
  bool lower = BigNat::pow(rank_num, est.k) * BigNat::pow(est.t_c, est.k) <=
               four * BigNat::pow(est.t_d, est.k) * BigNat::pow(rank_den, est.k);
  return upper && lower;
}

/// Valid-order corpus for one n: lex, xor/affine/bitperm at several seeds.
inline std::vector<GeneratedOrder> valid_corpus(unsigned n,
                                                unsigned seeds_per_kind = 2) {
  std::vector<GeneratedOrder> out;
  out.push_back(generate(OrderSpec::make(OrderKind::Lex, n)));
  for (OrderKind k : {OrderKind::Xor, OrderKind::Affine, OrderKind::BitPerm})
    for (unsigned s = 1; s <= seeds_per_kind; ++s)
      out.push_back(generate(OrderSpec::make(k, n, s)));
  return out;
}

}  // namespace loplab::testing
