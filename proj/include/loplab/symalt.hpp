#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "loplab/bits.hpp"
#include "loplab/errors.hpp"

namespace loplab {

enum class PromiseSide : std::uint8_t { Yes, No, Outside };

/// A toy promise verifier A(q, u, v) with per-length certificate sizes.
/// The promise membership function and the designated irrefutable
/// certificates are ground truth for tests; the combining verifier never
/// reads them.
struct PromiseVerifier {
  unsigned max_query_len = 0;  // queries have lengths 1..max_query_len
  std::function<bool(const BitString& q, const BitString& u,
                     const BitString& v)>
      accept;
  std::function<unsigned(unsigned)> cert_len;

  std::function<PromiseSide(const BitString&)> promise_side;  // test-only
  std::function<BitString(unsigned)> yes_cert;                // w^1 per length
  std::function<BitString(unsigned)> no_cert;                 // w^0 per length
};

/// W = (w^0_1..w^0_p, w^1_1..w^1_p): certificates indexed by query length.
struct CertificateVector {
  std::vector<BitString> w0, w1;  // index len-1

  static CertificateVector honest(const PromiseVerifier& a) {
    CertificateVector v;
    for (unsigned len = 1; len <= a.max_query_len; ++len) {
      v.w0.push_back(a.no_cert(len));
      v.w1.push_back(a.yes_cert(len));
    }
    return v;
  }

  /// Arbitrary (possibly dishonest) certificates of the right lengths.
  static CertificateVector seeded(const PromiseVerifier& a,
                                  std::uint64_t seed) {
    Rng rng(seed);
    CertificateVector v;
    for (unsigned len = 1; len <= a.max_query_len; ++len) {
      v.w0.push_back(rng.next_bits(a.cert_len(len)));
      v.w1.push_back(rng.next_bits(a.cert_len(len)));
    }
    return v;
  }

  unsigned max_len() const { return static_cast<unsigned>(w0.size()); }

  const BitString& at(bool one, unsigned len) const {
    if (len == 0 || len > w0.size())
      throw RejectedInputError("certificate vector has no entry for length " +
                               std::to_string(len));
    return one ? w1[len - 1] : w0[len - 1];
  }
};

/// The four-bit combination used to answer one oracle query from two
/// certificate vectors.
inline bool merge_bit(bool a, bool b, bool c, bool d) {
  return (a && c) || (b && d);
}

/// A deterministic machine deciding a language through a promise oracle.
/// `run` drives the computation, asking queries of length <= query_budget
/// through the callback, and must be correct whenever promise-set queries
/// are answered correctly, irrespective of the other answers.
struct OracleMachine {
  unsigned input_len = 0;
  unsigned query_budget = 0;  // both max query count and max query length
  std::function<bool(const BitString& x,
                     const std::function<bool(const BitString&)>& ask)>
      run;
};

struct MergeRecord {
  BitString query;
  bool a, b, c, d, merged;
};

/// Simulates the machine on x, answering every oracle query q by
///   a = A(q, u1, v0), b = A(q, v1, u0), c = A(q, u1, u0), d = A(q, v1, v0)
/// with certificates drawn at index |q|, merged as (a ∧ c) ∨ (b ∧ d).
/// Cross-checking certificates of the same prover (c, d) is what makes one
/// honest vector force every promise answer.
inline bool combined_verifier(const OracleMachine& m, const PromiseVerifier& a,
                              const BitString& x, const CertificateVector& U,
                              const CertificateVector& V,
                              std::vector<MergeRecord>* merges = nullptr) {
  if (x.size() != m.input_len)
    throw RejectedInputError("input length does not match the machine");
  if (U.max_len() < m.query_budget || V.max_len() < m.query_budget)
    throw RejectedInputError("certificate vector too short for query budget");
  for (unsigned len = 1; len <= m.query_budget; ++len) {
    unsigned want = a.cert_len(len);
    if (U.at(false, len).size() != want || U.at(true, len).size() != want ||
        V.at(false, len).size() != want || V.at(true, len).size() != want)
      throw RejectedInputError("certificate length mismatch at query length " +
                               std::to_string(len));
  }

  unsigned asked = 0;
  auto ask = [&](const BitString& q) -> bool {
    if (q.size() == 0 || q.size() > m.query_budget)
      throw RejectedInputError("query length outside 1..p");
    if (++asked > m.query_budget)
      throw DefectError("machine exceeded its query budget");
    unsigned len = static_cast<unsigned>(q.size());
    bool av = a.accept(q, U.at(true, len), V.at(false, len));
    bool bv = a.accept(q, V.at(true, len), U.at(false, len));
    bool cv = a.accept(q, U.at(true, len), U.at(false, len));
    bool dv = a.accept(q, V.at(true, len), V.at(false, len));
    bool merged = merge_bit(av, bv, cv, dv);
    if (merges) merges->push_back({q, av, bv, cv, dv, merged});
    return merged;
  };
  return m.run(x, ask);
}

/// A concrete toy problem with a hidden prefix h (|h| = n/2, drawn from the
/// seed). Queries of length n whose first half equals h are in the promise
/// with class equal to their last bit; everything else is outside. h itself
/// is irrefutable on both sides.
struct HiddenPrefixProblem {
  BitString h;  // test-only secret
  PromiseVerifier verifier;
  OracleMachine machine;

  /// The language the default machine decides: the last input bit. Routed
  /// through an in-promise oracle query, so a wrong merged answer flips it.
  bool language(const BitString& x) const { return x[x.size() - 1] != 0; }
};

inline HiddenPrefixProblem hidden_prefix_problem(unsigned n,
                                                 std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw RejectedInputError("hidden prefix problem requires even n >= 4");
  Rng rng(seed);
  BitString h = rng.next_bits(n / 2);

  HiddenPrefixProblem p;
  p.h = h;

  PromiseVerifier v;
  v.max_query_len = n;
  v.cert_len = [](unsigned len) { return len / 2; };
  v.accept = [](const BitString& q, const BitString& u, const BitString& w0) {
    BitString first = q.prefix(q.size() / 2);
    if (u == first || w0 == first) return q[q.size() - 1] != 0;
    return false;
  };
  v.promise_side = [h, n](const BitString& q) {
    if (q.size() != n || !(q.prefix(n / 2) == h)) return PromiseSide::Outside;
    return q[q.size() - 1] ? PromiseSide::Yes : PromiseSide::No;
  };
  v.yes_cert = [h](unsigned len) {
    BitString w(len / 2);
    for (std::size_t i = 0; i < w.size() && i < h.size(); ++i) w.set(i, h[i]);
    return w;
  };
  // placeholder pattern doubles as the no-certificate; only length n matters
  v.no_cert = v.yes_cert;
  p.verifier = v;

  OracleMachine m;
  m.input_len = n;
  m.query_budget = n;
  // Prefix ladder: probes of lengths 2, 4, ..., n refine the hidden prefix
  // one bit at a time, with a filler adapted to the previous answer. Every
  // probe except the last is outside the promise; the machine cannot see
  // which, and only the final forced answer decides the output.
  m.run = [h, n](const BitString& x,
                 const std::function<bool(const BitString&)>& ask) -> bool {
    bool prev = false, ans = false;
    for (unsigned len = 1; len <= n / 2; ++len) {
      BitString mid(len - 1);
      for (unsigned i = 0; i + 1 < len; ++i)
        mid.set(i, prev ? x[i] : (x[i] ^ 1));
      BitString last(1);
      last.set(0, x[n - 1]);
      ans = ask(h.prefix(len) + mid + last);
      prev = ans;
    }
    return ans;
  };
  p.machine = m;
  return p;
}

}  // namespace loplab
