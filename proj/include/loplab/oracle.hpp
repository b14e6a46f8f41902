#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loplab/bignat.hpp"
#include "loplab/circuit.hpp"
#include "loplab/errors.hpp"

namespace loplab {

/// One set-size-estimation query: is |C| >= m, promised that either
/// |C| >= m or |C| <= m/2?
struct SseQuery {
  AnyCircuit circuit;
  BigNat m;  // >= 1

  SseQuery(AnyCircuit c, BigNat threshold)
      : circuit(std::move(c)), m(std::move(threshold)) {
    if (m.is_zero()) throw RejectedInputError("SSE query requires m >= 1");
  }
};

enum class PromiseClass : std::uint8_t { Yes, No, Gap };

inline const char* to_string(PromiseClass c) {
  switch (c) {
    case PromiseClass::Yes: return "YES";
    case PromiseClass::No: return "NO";
    default: return "GAP";
  }
}

/// Exact three-way classification: YES iff count >= m, NO iff 2·count <= m,
/// GAP otherwise. Integer comparisons throughout.
inline PromiseClass classify(const SseQuery& q,
                             unsigned cap = kDefaultBruteForceCap) {
  const BigNat& count = count_exact(q.circuit, cap);
  if (count >= q.m) return PromiseClass::Yes;
  if (count + count <= q.m) return PromiseClass::No;
  return PromiseClass::Gap;
}

struct QueryRecord {
  SseQuery query;
  bool answer;
  PromiseClass cls;
};

/// Append-only transcript of one run.
using QueryLog = std::vector<QueryRecord>;

/// Key identifying a query up to equality: full circuit text plus m.
inline std::string query_key(const SseQuery& q) {
  return query_text(q.circuit) + "|" + q.m.to_decimal();
}

/// Published hash for seeded gap answers: FNV-1a over the query text, then
/// '|' and the decimal threshold, finished with the splitmix64 mixer against
/// the seed. answer = lowest bit.
inline std::uint64_t seeded_query_hash(const SseQuery& q, std::uint64_t seed) {
  std::uint64_t h = fnv1a64(query_text(q.circuit));
  h = fnv1a64("|", h);
  h = fnv1a64(q.m.to_decimal(), h);
  return mix_hash_seed(h, seed);
}

enum class GapPolicy : std::uint8_t { AlwaysYes, AlwaysNo, SeededHash, Alternating };

inline const char* to_string(GapPolicy p) {
  switch (p) {
    case GapPolicy::AlwaysYes: return "always_yes";
    case GapPolicy::AlwaysNo: return "always_no";
    case GapPolicy::SeededHash: return "seeded_hash";
    default: return "alternating";
  }
}

/// An SSE answer source. Every model is forced on promise queries: YES
/// queries answer 1 and NO queries answer 0; only GAP behavior varies.
class SseOracle {
 public:
  explicit SseOracle(unsigned cap = kDefaultBruteForceCap) : cap_(cap) {}
  virtual ~SseOracle() = default;

  bool answer(const SseQuery& q) {
    PromiseClass cls = classify(q, cap_);
    bool a;
    switch (cls) {
      case PromiseClass::Yes: a = true; break;
      case PromiseClass::No: a = false; break;
      default: a = gap_answer(q); break;
    }
    ++queries_answered_;
    if (log_) log_->push_back({q, a, cls});
    return a;
  }

  /// True when answer() is a pure function of the query; such models may be
  /// queried concurrently. Alternating and memoizing models carry state and
  /// require external serialization of calls.
  virtual bool stateless() const { return true; }

  virtual std::string describe() const = 0;

  unsigned cap() const { return cap_; }
  std::uint64_t queries_answered() const { return queries_answered_; }
  void attach_log(QueryLog* log) { log_ = log; }

 protected:
  virtual bool gap_answer(const SseQuery& q) = 0;

 private:
  unsigned cap_;
  std::uint64_t queries_answered_ = 0;
  QueryLog* log_ = nullptr;
};

/// The consistent threshold language O = {(C, m) : count >= m}.
class ThresholdOracle final : public SseOracle {
 public:
  using SseOracle::SseOracle;
  std::string describe() const override { return "threshold"; }

 protected:
  bool gap_answer(const SseQuery&) override { return false; }  // count < m
};

/// Black box that answers GAP queries per policy. SeededHash is a pure
/// function of (query, seed); Alternating flips per gap call and is the one
/// intentionally inconsistent model.
class AdversarialOracle final : public SseOracle {
 public:
  AdversarialOracle(GapPolicy policy, std::uint64_t seed,
                    unsigned cap = kDefaultBruteForceCap)
      : SseOracle(cap), policy_(policy), seed_(seed) {}

  bool stateless() const override { return policy_ != GapPolicy::Alternating; }

  std::string describe() const override {
    std::string d = to_string(policy_);
    if (policy_ == GapPolicy::SeededHash) d += ":" + std::to_string(seed_);
    return d;
  }

  GapPolicy policy() const { return policy_; }
  std::uint64_t seed() const { return seed_; }

 protected:
  bool gap_answer(const SseQuery& q) override {
    switch (policy_) {
      case GapPolicy::AlwaysYes: return true;
      case GapPolicy::AlwaysNo: return false;
      case GapPolicy::SeededHash: return seeded_query_hash(q, seed_) & 1;
      default: return (gap_calls_++ % 2) == 0;  // 1, 0, 1, ...
    }
  }

 private:
  GapPolicy policy_;
  std::uint64_t seed_;
  std::uint64_t gap_calls_ = 0;
};

/// Wrapper realizing the answer-table construction: a repeated query gets
/// the stored first answer, so any inner black box looks like a language.
class MemoizingOracle final : public SseOracle {
 public:
  explicit MemoizingOracle(std::unique_ptr<SseOracle> inner)
      : SseOracle(inner->cap()), inner_(std::move(inner)) {}

  bool stateless() const override { return false; }

  std::string describe() const override {
    return "memo(" + inner_->describe() + ")";
  }

 protected:
  bool gap_answer(const SseQuery& q) override {
    std::string key = query_key(q);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    bool a = inner_->answer(q);
    table_.emplace(std::move(key), a);
    return a;
  }

 private:
  std::unique_ptr<SseOracle> inner_;
  std::unordered_map<std::string, bool> table_;
};

/// Deterministic answer function rebuilt from a transcript: agrees with the
/// log on logged queries and with promise forcing everywhere, answering "no"
/// on unlogged gap queries (the language Π_YES ∪ {logged yes answers}).
class ReconstructedOracle final : public SseOracle {
 public:
  explicit ReconstructedOracle(const QueryLog& log,
                               unsigned cap = kDefaultBruteForceCap)
      : SseOracle(cap) {
    for (const QueryRecord& rec : log) {
      std::string key = query_key(rec.query);
      auto [it, inserted] = table_.emplace(std::move(key), rec.answer);
      if (!inserted && it->second != rec.answer)
        throw InvalidLogError(
            "query log contains two conflicting answers for one query");
    }
  }

  std::string describe() const override { return "reconstructed"; }

 protected:
  bool gap_answer(const SseQuery& q) override {
    auto it = table_.find(query_key(q));
    return it != table_.end() ? it->second : false;
  }

 private:
  std::unordered_map<std::string, bool> table_;
};

inline std::unique_ptr<SseOracle> reconstruct_consistent_language(
    const QueryLog& log, unsigned cap = kDefaultBruteForceCap) {
  return std::make_unique<ReconstructedOracle>(log, cap);
}

/// One JSON object per line, schema:
/// {"m":"<decimal>","circuit_hash":"<hex>","class":"YES|NO|GAP","answer":0|1}
inline std::string to_jsonl(const QueryLog& log) {
  std::string out;
  char hex[17];
  for (const QueryRecord& rec : log) {
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(
                      query_circuit_hash(rec.query.circuit)));
    out += "{\"m\":\"" + rec.query.m.to_decimal() + "\",\"circuit_hash\":\"" +
           hex + "\",\"class\":\"" + to_string(rec.cls) + "\",\"answer\":" +
           (rec.answer ? "1" : "0") + "}\n";
  }
  return out;
}

}  // namespace loplab
