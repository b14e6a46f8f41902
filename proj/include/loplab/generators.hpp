#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loplab/bits.hpp"
#include "loplab/circuit.hpp"
#include "loplab/errors.hpp"
#include "loplab/rank.hpp"

namespace loplab {

enum class OrderKind : std::uint8_t {
  Lex,
  Xor,
  Affine,
  BitPerm,
  Broken2,
  Broken3,
  EmptyRelation
};

inline const char* to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::Xor: return "xor";
    case OrderKind::Affine: return "affine";
    case OrderKind::BitPerm: return "bitperm";
    case OrderKind::Broken2: return "broken2";
    case OrderKind::Broken3: return "broken3";
    default: return "empty";
  }
}

inline std::optional<OrderKind> order_kind_from_string(const std::string& s) {
  if (s == "lex") return OrderKind::Lex;
  if (s == "xor") return OrderKind::Xor;
  if (s == "affine") return OrderKind::Affine;
  if (s == "bitperm") return OrderKind::BitPerm;
  if (s == "broken2") return OrderKind::Broken2;
  if (s == "broken3") return OrderKind::Broken3;
  if (s == "empty") return OrderKind::EmptyRelation;
  return std::nullopt;
}

/// Instance recipe. Unset parameters are drawn deterministically from the
/// seed, so (kind, n, seed) replays to identical bytes.
struct OrderSpec {
  OrderKind kind = OrderKind::Lex;
  unsigned n = 0;
  std::uint64_t seed = 0;

  std::optional<BitString> key;                       // Xor
  std::optional<std::vector<std::uint32_t>> matrix;   // Affine rows, bit j = col j
  std::optional<BitString> offset;                    // Affine shift
  std::optional<std::vector<std::uint32_t>> perm;     // BitPerm
  std::optional<OrderKind> base_kind;                 // Broken2/Broken3
  std::optional<std::vector<BitString>> defect;       // planted elements

  static OrderSpec make(OrderKind kind, unsigned n, std::uint64_t seed = 0) {
    OrderSpec s;
    s.kind = kind;
    s.n = n;
    s.seed = seed;
    return s;
  }
};

/// A generated instance with its ground truth: either the known minimum or
/// the planted, re-verifiable defect.
struct GeneratedOrder {
  OrderSpec spec;
  OrderCircuit order;
  std::optional<BitString> argmin;
  std::optional<OrderVerdict> planted_defect;
};

namespace gf2 {

/// Rank of an n x n bit matrix (rows as masks) over GF(2).
inline unsigned rank(std::vector<std::uint32_t> rows, unsigned n) {
  unsigned r = 0;
  for (unsigned col = 0; col < n && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !((rows[pivot] >> col) & 1)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> col) & 1)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

inline bool invertible(const std::vector<std::uint32_t>& rows, unsigned n) {
  return rows.size() == n && rank(rows, n) == n;
}

/// Solves A x = b over GF(2) for invertible A; x as a BitString.
inline BitString solve(std::vector<std::uint32_t> rows, const BitString& b,
                       unsigned n) {
  std::vector<std::uint8_t> rhs(n);
  for (unsigned i = 0; i < n; ++i) rhs[i] = b[i];
  std::vector<unsigned> pivot_row(n);
  unsigned r = 0;
  for (unsigned col = 0; col < n; ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !((rows[pivot] >> col) & 1)) ++pivot;
    if (pivot == rows.size())
      throw RejectedInputError("singular matrix in GF(2) solve");
    std::swap(rows[r], rows[pivot]);
    std::swap(rhs[r], rhs[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && ((rows[i] >> col) & 1)) {
        rows[i] ^= rows[r];
        rhs[i] ^= rhs[r];
      }
    }
    pivot_row[col] = r;
    ++r;
  }
  BitString x(n);
  for (unsigned col = 0; col < n; ++col) x.set(col, rhs[pivot_row[col]]);
  return x;
}

}  // namespace gf2

namespace detail {

/// Lexicographic comparison of two transformed n-bit blocks. make_block
/// receives (builder, input offset) and returns the transformed bit refs.
template <typename MakeBlock>
Circuit lex_on_transformed(unsigned n, MakeBlock&& make_block) {
  CircuitBuilder b(2 * n);
  std::vector<std::uint32_t> xs = make_block(b, 0u);
  std::vector<std::uint32_t> ys = make_block(b, n);
  std::optional<std::uint32_t> out, prefix_eq;
  for (unsigned i = 0; i < n; ++i) {
    std::uint32_t lt = b.and_gate(b.not_gate(xs[i]), ys[i]);
    std::uint32_t term = prefix_eq ? b.and_gate(*prefix_eq, lt) : lt;
    out = out ? b.or_gate(*out, term) : term;
    if (i + 1 < n) {
      std::uint32_t eq = b.not_gate(b.xor_gate(xs[i], ys[i]));
      prefix_eq = prefix_eq ? b.and_gate(*prefix_eq, eq) : eq;
    }
  }
  return b.build(*out);
}

inline std::vector<std::uint32_t> identity_block(CircuitBuilder& b,
                                                 unsigned offset, unsigned n) {
  std::vector<std::uint32_t> refs;
  refs.reserve(n);
  for (unsigned i = 0; i < n; ++i) refs.push_back(b.input(offset + i));
  return refs;
}

}  // namespace detail

/// Seeded random circuit for counting corpora: a DAG of random gates over
/// the inputs with the last gate as output.
inline Circuit random_circuit(unsigned n, unsigned num_gates,
                              std::uint64_t seed) {
  if (n == 0) throw RejectedInputError("random_circuit requires n >= 1");
  Rng rng(seed);
  CircuitBuilder b(n);
  std::vector<std::uint32_t> refs;
  for (unsigned i = 0; i < n; ++i) refs.push_back(b.input(i));
  for (unsigned g = 0; g < num_gates; ++g) {
    std::uint64_t pick = rng.next_below(16);
    auto operand = [&] {
      return refs[rng.next_below(refs.size())];
    };
    std::uint32_t made;
    if (pick == 0)
      made = b.constant(rng.next_bit());
    else if (pick <= 3)
      made = b.not_gate(operand());
    else if (pick <= 7)
      made = b.and_gate(operand(), operand());
    else if (pick <= 11)
      made = b.or_gate(operand(), operand());
    else
      made = b.xor_gate(operand(), operand());
    refs.push_back(made);
  }
  return b.build(refs.back());
}

inline GeneratedOrder generate(const OrderSpec& spec);

namespace detail {

inline GeneratedOrder generate_valid(OrderKind kind, unsigned n,
                                     const OrderSpec& spec, Rng& rng) {
  switch (kind) {
    case OrderKind::Lex: {
      Circuit c = lex_on_transformed(n, [&](CircuitBuilder& b, unsigned off) {
        return identity_block(b, off, n);
      });
      return {spec, OrderCircuit(n, c), BitString(n), std::nullopt};
    }
    case OrderKind::Xor: {
      BitString key = spec.key ? *spec.key : rng.next_bits(n);
      if (key.size() != n)
        throw RejectedInputError("xor key length does not match n");
      Circuit c = lex_on_transformed(n, [&](CircuitBuilder& b, unsigned off) {
        std::vector<std::uint32_t> refs;
        for (unsigned i = 0; i < n; ++i) {
          std::uint32_t in = b.input(off + i);
          refs.push_back(key[i] ? b.not_gate(in) : in);
        }
        return refs;
      });
      return {spec, OrderCircuit(n, c), key, std::nullopt};
    }
    case OrderKind::Affine: {
      std::vector<std::uint32_t> rows;
      if (spec.matrix) {
        rows = *spec.matrix;
        if (!gf2::invertible(rows, n))
          throw RejectedInputError("affine matrix is singular over GF(2)");
      } else {
        do {
          rows.clear();
          for (unsigned i = 0; i < n; ++i)
            rows.push_back(static_cast<std::uint32_t>(
                rng.next() & ((std::uint64_t{1} << n) - 1)));
        } while (!gf2::invertible(rows, n));
      }
      BitString shift = spec.offset ? *spec.offset : rng.next_bits(n);
      if (shift.size() != n)
        throw RejectedInputError("affine offset length does not match n");
      Circuit c = lex_on_transformed(n, [&](CircuitBuilder& b, unsigned off) {
        std::vector<std::uint32_t> ins;
        for (unsigned i = 0; i < n; ++i) ins.push_back(b.input(off + i));
        std::vector<std::uint32_t> refs;
        for (unsigned i = 0; i < n; ++i) {
          std::optional<std::uint32_t> acc;
          for (unsigned j = 0; j < n; ++j)
            if ((rows[i] >> j) & 1)
              acc = acc ? b.xor_gate(*acc, ins[j]) : ins[j];
          if (!acc) acc = b.constant(false);  // unreachable for invertible A
          refs.push_back(shift[i] ? b.not_gate(*acc) : *acc);
        }
        return refs;
      });
      return {spec, OrderCircuit(n, c), gf2::solve(rows, shift, n),
              std::nullopt};
    }
    case OrderKind::BitPerm: {
      std::vector<std::uint32_t> perm;
      if (spec.perm) {
        perm = *spec.perm;
        std::vector<bool> seen(n, false);
        if (perm.size() != n)
          throw RejectedInputError("permutation length does not match n");
        for (std::uint32_t p : perm) {
          if (p >= n || seen[p])
            throw RejectedInputError("not a permutation of 0..n-1");
          seen[p] = true;
        }
      } else {
        for (unsigned i = 0; i < n; ++i) perm.push_back(i);
        for (unsigned i = n; i > 1; --i) {
          std::uint64_t j = rng.next_below(i);
          std::swap(perm[i - 1], perm[j]);
        }
      }
      Circuit c = lex_on_transformed(n, [&](CircuitBuilder& b, unsigned off) {
        std::vector<std::uint32_t> refs;
        for (unsigned i = 0; i < n; ++i) refs.push_back(b.input(off + perm[i]));
        return refs;
      });
      // permuted zeros are zeros
      return {spec, OrderCircuit(n, c), BitString(n), std::nullopt};
    }
    default:
      throw RejectedInputError("not a valid-order kind");
  }
}

inline std::vector<BitString> draw_distinct(Rng& rng, unsigned n,
                                            unsigned count) {
  std::vector<BitString> out;
  while (out.size() < count) {
    BitString cand = BitString::from_index(rng.next_below(std::uint64_t{1} << n), n);
    bool fresh = true;
    for (const BitString& seen : out) fresh = fresh && !(seen == cand);
    if (fresh) out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace detail

/// Builds the instance described by `spec` together with its ground truth.
/// Broken kinds splice a planted defect into a valid base order by
/// multiplexing the comparator on the affected pairs; everything else
/// defers to the base, so the defect is local and extractable.
inline GeneratedOrder generate(const OrderSpec& spec) {
  const unsigned n = spec.n;
  if (n == 0 || n > 31)
    throw RejectedInputError("order size n must be in 1..31");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case OrderKind::Lex:
    case OrderKind::Xor:
    case OrderKind::Affine:
    case OrderKind::BitPerm:
      return detail::generate_valid(spec.kind, n, spec, rng);

    case OrderKind::EmptyRelation: {
      CircuitBuilder b(2 * n);
      Circuit c = b.build(b.constant(false));
      GeneratedOrder out{spec, OrderCircuit(n, c), std::nullopt, std::nullopt};
      out.planted_defect = OrderVerdict::non_total(
          BitString::from_index(0, n), BitString::from_index(1, n));
      return out;
    }

    case OrderKind::Broken2: {
      OrderKind base_kind = spec.base_kind.value_or(static_cast<OrderKind>(
          rng.next_below(4)));  // Lex, Xor, Affine, BitPerm
      GeneratedOrder base = detail::generate_valid(base_kind, n, spec, rng);
      std::vector<BitString> pair =
          spec.defect ? *spec.defect : detail::draw_distinct(rng, n, 2);
      if (pair.size() != 2 || pair[0] == pair[1])
        throw RejectedInputError("broken2 needs two distinct elements");
      CircuitBuilder b(2 * n);
      std::uint32_t base_out =
          b.append(base.order.circuit(),
                   [](std::uint32_t j) { return Gate{GateKind::Input, j, 0}; });
      // builder calls are sequenced into statements so gate ids (and the
      // serialized bytes) do not depend on argument evaluation order
      std::uint32_t fwd_x = b.equals_constant(pair[0], 0);
      std::uint32_t fwd_y = b.equals_constant(pair[1], n);
      std::uint32_t fwd = b.and_gate(fwd_x, fwd_y);
      std::uint32_t rev_x = b.equals_constant(pair[1], 0);
      std::uint32_t rev_y = b.equals_constant(pair[0], n);
      std::uint32_t rev = b.and_gate(rev_x, rev_y);
      std::uint32_t planted = b.or_gate(fwd, rev);
      Circuit c = b.build(b.or_gate(base_out, planted));
      GeneratedOrder out{spec, OrderCircuit(n, c), std::nullopt, std::nullopt};
      out.planted_defect = OrderVerdict::pair(pair[0], pair[1]);
      return out;
    }

    case OrderKind::Broken3: {
      if (n < 2) throw RejectedInputError("broken3 needs n >= 2");
      OrderKind base_kind = spec.base_kind.value_or(
          static_cast<OrderKind>(rng.next_below(4)));
      GeneratedOrder base = detail::generate_valid(base_kind, n, spec, rng);
      std::vector<BitString> t =
          spec.defect ? *spec.defect : detail::draw_distinct(rng, n, 3);
      if (t.size() != 3 || t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        throw RejectedInputError("broken3 needs three distinct elements");
      CircuitBuilder b(2 * n);
      std::uint32_t base_out =
          b.append(base.order.circuit(),
                   [](std::uint32_t j) { return Gate{GateKind::Input, j, 0}; });
      auto edge = [&](const BitString& from, const BitString& to) {
        std::uint32_t ex = b.equals_constant(from, 0);
        std::uint32_t ey = b.equals_constant(to, n);
        return b.and_gate(ex, ey);
      };
      // Planted cycle t0 < t1 < t2 < t0; all six ordered pairs among the
      // triple are overridden so the cycle is exact regardless of the base.
      std::uint32_t e01 = edge(t[0], t[1]);
      std::uint32_t e12 = edge(t[1], t[2]);
      std::uint32_t e20 = edge(t[2], t[0]);
      std::uint32_t cycle = b.or_gate(b.or_gate(e01, e12), e20);
      std::uint32_t e10 = edge(t[1], t[0]);
      std::uint32_t e21 = edge(t[2], t[1]);
      std::uint32_t e02 = edge(t[0], t[2]);
      std::uint32_t reversed = b.or_gate(b.or_gate(e10, e21), e02);
      std::uint32_t overridden = b.or_gate(cycle, reversed);
      Circuit c = b.build(
          b.or_gate(b.and_gate(b.not_gate(overridden), base_out), cycle));
      GeneratedOrder out{spec, OrderCircuit(n, c), std::nullopt, std::nullopt};
      out.planted_defect = OrderVerdict::triple(t[0], t[1], t[2]);
      return out;
    }
  }
  throw RejectedInputError("unknown order kind");
}

/// Ground-truth sidecar, schema 1.
inline std::string sidecar_json(const GeneratedOrder& g) {
  std::string out = "{\"schema\":1,\"kind\":\"" +
                    std::string(to_string(g.spec.kind)) +
                    "\",\"n\":" + std::to_string(g.spec.n) +
                    ",\"seed\":" + std::to_string(g.spec.seed);
  if (g.argmin) out += ",\"argmin\":\"" + g.argmin->to_string() + "\"";
  if (g.planted_defect) {
    const OrderVerdict& d = *g.planted_defect;
    out += ",\"defect\":{\"type\":\"" + std::string(to_string(d.kind)) +
           "\",\"x\":\"" + d.x.to_string() + "\",\"y\":\"" + d.y.to_string() +
           "\"";
    if (d.kind == OrderVerdict::Kind::Triple)
      out += ",\"z\":\"" + d.z.to_string() + "\"";
    out += "}";
  }
  out += "}";
  return out;
}

}  // namespace loplab
