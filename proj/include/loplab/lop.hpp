#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loplab/circuit.hpp"
#include "loplab/counting.hpp"
#include "loplab/errors.hpp"
#include "loplab/oracle.hpp"
#include "loplab/rank.hpp"
#include "loplab/rational.hpp"

namespace loplab {

struct BackOptions {
  /// Estimation accuracy; defaults to 1/(8n), which makes the per-call
  /// contraction factor exactly sqrt(2).
  std::optional<Rat> eps;
  /// Test hook invoked after each bit is fixed with (step index from 1,
  /// current restricted set circuit).
  std::function<void(unsigned, const Circuit&)> on_step;
};

struct BackStats {
  std::uint64_t oracle_queries = 0;
  BitString chosen_bits;
};

/// One contraction step: returns beta with rank(beta) <= rank(alpha)/sqrt(2)
/// under any oracle model. Works on the down-set of alpha, fixing one bit at
/// a time; branch emptiness is decided by the always-in-promise query
/// (C_b, 1) and occupied branches are compared by oracle-estimated average
/// rank as exact rationals, ties preferring bit 0.
inline BitString back(const OrderCircuit& e, const BitString& alpha,
                      SseOracle& oracle, Driver driver,
                      const BackOptions& opts = {},
                      BackStats* stats = nullptr) {
  const unsigned n = e.n();
  if (alpha.size() != n)
    throw RejectedInputError("alpha length does not match order n");
  const Rat eps = opts.eps ? *opts.eps : Rat(1, 8 * std::uint64_t{n});
  if (eps.is_zero()) throw RejectedInputError("eps must be positive");

  const std::uint64_t queries_before = oracle.queries_answered();
  Circuit current = build_downset(e, alpha);
  BitString beta(n);
  for (unsigned i = 0; i < n; ++i) {
    Circuit zero = restrict_input(current, i, false);
    Circuit one = restrict_input(current, i, true);
    bool zero_occupied = oracle.answer(SseQuery{AnyCircuit{zero}, BigNat{1}});
    bool one_occupied = oracle.answer(SseQuery{AnyCircuit{one}, BigNat{1}});
    bool pick;
    if (!zero_occupied && !one_occupied)
      throw DefectError("both restriction branches empty at bit " +
                        std::to_string(i));
    if (!zero_occupied) {
      pick = true;
    } else if (!one_occupied) {
      pick = false;
    } else {
      RankEstimate r0 = rank_estimate(zero, e, eps, oracle, driver);
      RankEstimate r1 = rank_estimate(one, e, eps, oracle, driver);
      pick = r1.value() < r0.value();  // r1 >= r0 keeps bit 0
    }
    beta.set(i, pick ? 1 : 0);
    current = pick ? one : zero;
    if (opts.on_step) opts.on_step(i + 1, current);
  }
  if (stats) {
    stats->oracle_queries = oracle.queries_answered() - queries_before;
    stats->chosen_bits = beta;
  }
  return beta;
}

struct IterationRecord {
  BitString alpha;
  BitString beta;
  std::optional<std::uint64_t> exact_rank_alpha;
  std::uint64_t oracle_queries = 0;
  BitString chosen_bits;
};

struct SolveTrace {
  unsigned n = 0;
  std::string eps;  // accuracy actually used, reduced form
  std::vector<IterationRecord> iterations;
  std::uint64_t total_queries = 0;
  std::uint64_t back_calls = 0;
};

struct SolveResult {
  std::optional<BitString> minimum;
  std::optional<OrderVerdict> counterexample;
  SolveTrace trace;

  bool found_minimum() const { return minimum.has_value(); }
};

struct SolveOptions {
  unsigned cap = kDefaultBruteForceCap;
  std::optional<Rat> eps;
  /// Fill exact_rank_alpha in the trace (costs one exact rank per iteration;
  /// never consulted by the solver's control flow).
  bool record_exact_ranks = false;
};

/// Full LOP solver: validates the order (returning a verified counterexample
/// on defect), then iterates back() from alpha = 0^n, beta = 1^n until the
/// fixed point, which is the unique minimum. Valid orders need at most 2n
/// back() calls; the budget of 2n + 2 exists to turn an impossible
/// non-termination into a diagnosable defect.
inline SolveResult solve(const OrderCircuit& e, SseOracle& oracle,
                         Driver driver, const SolveOptions& opts = {}) {
  const unsigned n = e.n();
  SolveResult result;
  result.trace.n = n;
  const Rat eps = opts.eps ? *opts.eps : Rat(1, 8 * std::uint64_t{n});
  result.trace.eps = eps.to_string();

  OrderVerdict verdict = check_order(e, opts.cap);
  if (!verdict.valid()) {
    result.counterexample = verdict;
    return result;
  }

  BackOptions back_opts;
  back_opts.eps = eps;
  const std::uint64_t budget = 2 * std::uint64_t{n} + 2;
  BitString alpha = BitString::from_index(0, n);
  BitString beta = BitString::from_index((std::uint64_t{1} << n) - 1, n);
  while (alpha != beta) {
    alpha = beta;
    if (result.trace.back_calls == budget)
      throw DefectError("solver exceeded its iteration budget of " +
                        std::to_string(budget) +
                        "; oracle or model defect suspected");
    IterationRecord rec;
    rec.alpha = alpha;
    if (opts.record_exact_ranks && 2 * n <= opts.cap)
      rec.exact_rank_alpha = rank_exact(e, alpha, opts.cap);
    BackStats stats;
    beta = back(e, alpha, oracle, driver, back_opts, &stats);
    rec.beta = beta;
    rec.oracle_queries = stats.oracle_queries;
    rec.chosen_bits = stats.chosen_bits;
    result.trace.total_queries += stats.oracle_queries;
    ++result.trace.back_calls;
    result.trace.iterations.push_back(std::move(rec));
  }
  result.minimum = alpha;
  return result;
}

/// Trace serialization, schema 1:
/// {"schema":1,"n":...,"eps":"...","iterations":[{"alpha":"...","beta":"...",
///  "queries":...}],"total_queries":...,"back_calls":...}
/// Iterations carry "exact_rank_alpha" when it was recorded.
inline std::string trace_to_json(const SolveTrace& trace) {
  std::string out = "{\"schema\":1,\"n\":" + std::to_string(trace.n) +
                    ",\"eps\":\"" + trace.eps + "\",\"iterations\":[";
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const IterationRecord& rec = trace.iterations[i];
    if (i) out += ",";
    out += "{\"alpha\":\"" + rec.alpha.to_string() + "\",\"beta\":\"" +
           rec.beta.to_string() + "\",\"queries\":" +
           std::to_string(rec.oracle_queries);
    if (rec.exact_rank_alpha)
      out += ",\"exact_rank_alpha\":" + std::to_string(*rec.exact_rank_alpha);
    out += "}";
  }
  out += "],\"total_queries\":" + std::to_string(trace.total_queries) +
         ",\"back_calls\":" + std::to_string(trace.back_calls) + "}";
  return out;
}

}  // namespace loplab
