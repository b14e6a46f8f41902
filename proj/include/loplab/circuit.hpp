#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "loplab/bignat.hpp"
#include "loplab/bits.hpp"
#include "loplab/errors.hpp"

namespace loplab {

/// Exact counting refuses circuits with more inputs than this unless the
/// caller overrides the limit.
inline constexpr unsigned kDefaultBruteForceCap = 24;

enum class GateKind : std::uint8_t { Input, Const, Not, And, Or, Xor };

/// One gate. `a` is the input index for Input, the bit for Const, and the
/// first operand gate otherwise; `b` is the second operand where present.
struct Gate {
  GateKind kind;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Immutable Boolean circuit: a DAG of gates in topological order with one
/// designated output. Cheap to copy (shared representation); exact count,
/// canonical text and content hash are memoized per circuit.
class Circuit {
 public:
  /// Default: the 0-input CONST 0 circuit (a valid, empty set).
  Circuit() {
    auto d = std::make_shared<Data>();
    d->gates.push_back({GateKind::Const, 0, 0});
    data_ = std::move(d);
  }

  unsigned num_inputs() const { return data_->num_inputs; }
  const std::vector<Gate>& gates() const { return data_->gates; }
  std::uint32_t output() const { return data_->output; }

  bool eval(const BitString& assignment) const {
    if (assignment.size() != data_->num_inputs)
      throw RejectedInputError("assignment length " +
                               std::to_string(assignment.size()) +
                               " does not match circuit arity " +
                               std::to_string(data_->num_inputs));
    std::vector<std::uint8_t> vals(data_->gates.size());
    for (std::size_t i = 0; i < data_->gates.size(); ++i) {
      const Gate& g = data_->gates[i];
      switch (g.kind) {
        case GateKind::Input: vals[i] = assignment[g.a]; break;
        case GateKind::Const: vals[i] = static_cast<std::uint8_t>(g.a); break;
        case GateKind::Not: vals[i] = vals[g.a] ^ 1u; break;
        case GateKind::And: vals[i] = vals[g.a] & vals[g.b]; break;
        case GateKind::Or: vals[i] = vals[g.a] | vals[g.b]; break;
        case GateKind::Xor: vals[i] = vals[g.a] ^ vals[g.b]; break;
      }
    }
    return vals[data_->output] != 0;
  }

  /// Packed truth table over all 2^n assignments, 64 per word; the bit for
  /// assignment index t (big-endian bit order) is word t/64, bit t%64.
  std::vector<std::uint64_t> eval_all() const {
    const unsigned n = data_->num_inputs;
    const std::size_t words = n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
    std::vector<std::uint64_t> table(words);
    std::vector<std::uint64_t> vals(data_->gates.size());
    for (std::size_t w = 0; w < words; ++w)
      table[w] = eval_word(vals, w) & lane_mask(n);
    return table;
  }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.data_ == b.data_ ||
           (a.data_->num_inputs == b.data_->num_inputs &&
            a.data_->gates == b.data_->gates &&
            a.data_->output == b.data_->output);
  }

  /// Canonical serialization (see parse_circuit for the format). Memoized.
  const std::string& text() const {
    std::scoped_lock lock(data_->memo_mutex);
    if (!data_->text_memo) {
      std::ostringstream out;
      out << "circuit " << data_->num_inputs << "\n";
      for (std::size_t i = 0; i < data_->gates.size(); ++i) {
        const Gate& g = data_->gates[i];
        out << "g" << i << " = ";
        switch (g.kind) {
          case GateKind::Input: out << "INPUT " << g.a; break;
          case GateKind::Const: out << "CONST " << g.a; break;
          case GateKind::Not: out << "NOT g" << g.a; break;
          case GateKind::And: out << "AND g" << g.a << " g" << g.b; break;
          case GateKind::Or: out << "OR g" << g.a << " g" << g.b; break;
          case GateKind::Xor: out << "XOR g" << g.a << " g" << g.b; break;
        }
        out << "\n";
      }
      out << "output g" << data_->output << "\n";
      data_->text_memo = out.str();
    }
    return *data_->text_memo;
  }

  std::uint64_t content_hash() const {
    const std::string& t = text();
    std::scoped_lock lock(data_->memo_mutex);
    if (!data_->hash_memo) data_->hash_memo = fnv1a64(t);
    return *data_->hash_memo;
  }

  /// Exact number of satisfying assignments by word-parallel enumeration.
  const BigNat& count(unsigned cap = kDefaultBruteForceCap) const {
    const unsigned n = data_->num_inputs;
    if (n > cap)
      throw CapacityError("exact count of a " + std::to_string(n) +
                          "-input circuit exceeds the brute-force limit " +
                          std::to_string(cap));
    std::scoped_lock lock(data_->memo_mutex);
    if (!data_->count_memo) {
      const std::size_t words = n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
      std::vector<std::uint64_t> vals(data_->gates.size());
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < words; ++w)
        acc += std::popcount(eval_word(vals, w) & lane_mask(n));
      data_->count_memo = BigNat(acc);
    }
    return *data_->count_memo;
  }

 private:
  friend class CircuitBuilder;

  struct Data {
    unsigned num_inputs = 0;
    std::vector<Gate> gates;
    std::uint32_t output = 0;
    mutable std::mutex memo_mutex;
    mutable std::optional<BigNat> count_memo;
    mutable std::optional<std::string> text_memo;
    mutable std::optional<std::uint64_t> hash_memo;
  };

  explicit Circuit(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  static std::uint64_t lane_mask(unsigned n) {
    return n >= 6 ? ~std::uint64_t{0}
                  : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  }

  // Lanes of one word cover 64 consecutive assignment indices; input v sits
  // at index bit n-1-v, so low index bits (lanes) get fixed 64-bit patterns
  // and higher ones broadcast a bit of the word index.
  std::uint64_t eval_word(std::vector<std::uint64_t>& vals,
                          std::uint64_t w) const {
    static constexpr std::uint64_t kLane[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    const unsigned n = data_->num_inputs;
    const auto& gates = data_->gates;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      switch (g.kind) {
        case GateKind::Input: {
          unsigned p = n - 1 - g.a;  // index-bit position of this input
          vals[i] = p < 6 ? kLane[p]
                          : (((w >> (p - 6)) & 1) ? ~std::uint64_t{0} : 0);
          break;
        }
        case GateKind::Const: vals[i] = g.a ? ~std::uint64_t{0} : 0; break;
        case GateKind::Not: vals[i] = ~vals[g.a]; break;
        case GateKind::And: vals[i] = vals[g.a] & vals[g.b]; break;
        case GateKind::Or: vals[i] = vals[g.a] | vals[g.b]; break;
        case GateKind::Xor: vals[i] = vals[g.a] ^ vals[g.b]; break;
      }
    }
    return vals[data_->output];
  }

  std::shared_ptr<const Data> data_;
};

/// Incremental circuit construction; every reference is validated as it is
/// added, so a built circuit always satisfies the DAG invariants.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(unsigned num_inputs) {
    data_ = std::make_shared<Circuit::Data>();
    data_->num_inputs = num_inputs;
  }

  std::uint32_t input(std::uint32_t index) {
    if (index >= data_->num_inputs)
      throw RejectedInputError("input index " + std::to_string(index) +
                               " out of range for arity " +
                               std::to_string(data_->num_inputs));
    return push({GateKind::Input, index, 0});
  }
  std::uint32_t constant(bool bit) {
    return push({GateKind::Const, bit ? 1u : 0u, 0});
  }
  std::uint32_t not_gate(std::uint32_t a) {
    return push({GateKind::Not, checked(a), 0});
  }
  std::uint32_t and_gate(std::uint32_t a, std::uint32_t b) {
    return push({GateKind::And, checked(a), checked(b)});
  }
  std::uint32_t or_gate(std::uint32_t a, std::uint32_t b) {
    return push({GateKind::Or, checked(a), checked(b)});
  }
  std::uint32_t xor_gate(std::uint32_t a, std::uint32_t b) {
    return push({GateKind::Xor, checked(a), checked(b)});
  }

  /// Appends all gates of `c`, rewriting Input gates through `map_input`
  /// (which returns either a gate producing the replacement value or an
  /// Input/Const gate spec). Returns the index of c's output in this builder.
  template <typename MapInput>
  std::uint32_t append(const Circuit& c, MapInput&& map_input) {
    std::uint32_t offset = static_cast<std::uint32_t>(data_->gates.size());
    for (const Gate& g : c.gates()) {
      switch (g.kind) {
        case GateKind::Input: push(map_input(g.a)); break;
        case GateKind::Const: push(g); break;
        case GateKind::Not:
          push({GateKind::Not, g.a + offset, 0});
          break;
        default: push({g.kind, g.a + offset, g.b + offset}); break;
      }
    }
    return c.output() + offset;
  }

  /// Balanced AND tree over the given gates (at least one).
  std::uint32_t and_tree(std::vector<std::uint32_t> nodes) {
    if (nodes.empty()) throw RejectedInputError("and_tree over no gates");
    while (nodes.size() > 1) {
      std::vector<std::uint32_t> next;
      for (std::size_t i = 0; i + 1 < nodes.size(); i += 2)
        next.push_back(and_gate(nodes[i], nodes[i + 1]));
      if (nodes.size() % 2) next.push_back(nodes.back());
      nodes = std::move(next);
    }
    return nodes[0];
  }

  /// Subcircuit testing inputs [offset, offset+|alpha|) == alpha: balanced
  /// AND tree of per-bit XNORs.
  std::uint32_t equals_constant(const BitString& alpha,
                                std::uint32_t offset = 0) {
    std::vector<std::uint32_t> matches;
    matches.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      std::uint32_t x = input(offset + static_cast<std::uint32_t>(i));
      std::uint32_t c = constant(alpha[i] != 0);
      matches.push_back(not_gate(xor_gate(x, c)));
    }
    return and_tree(std::move(matches));
  }

  Circuit build(std::uint32_t output) {
    checked(output);
    data_->output = output;
    if (data_->gates.empty())
      throw RejectedInputError("circuit must contain at least one gate");
    return Circuit(std::shared_ptr<const Circuit::Data>(std::move(data_)));
  }

 private:
  std::uint32_t checked(std::uint32_t ref) const {
    if (ref >= data_->gates.size())
      throw RejectedInputError("gate reference g" + std::to_string(ref) +
                               " does not point to an earlier gate");
    return ref;
  }

  std::uint32_t push(Gate g) {
    if (g.kind == GateKind::Input && g.a >= data_->num_inputs)
      throw RejectedInputError("input index " + std::to_string(g.a) +
                               " out of range");
    data_->gates.push_back(g);
    return static_cast<std::uint32_t>(data_->gates.size() - 1);
  }

  std::shared_ptr<Circuit::Data> data_;
};

/// Restriction to {x : x_index = value}: input `index` is substituted by
/// CONST(value) and the position is pinned with a conjunct, so the result
/// has the same arity and its count is |{x in c : x_index = value}|. Counts
/// therefore split exactly: count(c) = count(c|_{i=0}) + count(c|_{i=1}).
inline Circuit restrict_input(const Circuit& c, unsigned index, bool value) {
  if (index >= c.num_inputs())
    throw RejectedInputError("restriction index " + std::to_string(index) +
                             " out of range for arity " +
                             std::to_string(c.num_inputs()));
  CircuitBuilder b(c.num_inputs());
  std::uint32_t out = b.append(c, [&](std::uint32_t j) -> Gate {
    if (j == index) return Gate{GateKind::Const, value ? 1u : 0u, 0};
    return Gate{GateKind::Input, j, 0};
  });
  std::uint32_t pin = b.input(index);
  if (!value) pin = b.not_gate(pin);
  return b.build(b.and_gate(out, pin));
}

/// Structural k-th tensor power: k disjoint-variable copies of the base,
/// conjoined. Never expanded; its exact count is count(base)^k.
class TensorPower {
 public:
  TensorPower(Circuit base, std::uint64_t k)
      : node_(std::make_shared<Node>(std::move(base), k)) {
    if (k == 0) throw RejectedInputError("tensor power requires k >= 1");
  }

  const Circuit& base() const { return node_->base; }
  std::uint64_t k() const { return node_->k; }
  std::uint64_t logical_arity() const { return node_->k * node_->base.num_inputs(); }

  const BigNat& count(unsigned cap = kDefaultBruteForceCap) const {
    const BigNat& base_count = node_->base.count(cap);
    std::scoped_lock lock(node_->memo_mutex);
    if (!node_->count_memo)
      node_->count_memo = BigNat::pow(base_count, node_->k);
    return *node_->count_memo;
  }

 private:
  struct Node {
    Node(Circuit b, std::uint64_t kk) : base(std::move(b)), k(kk) {}
    Circuit base;
    std::uint64_t k;
    mutable std::mutex memo_mutex;
    mutable std::optional<BigNat> count_memo;
  };
  std::shared_ptr<const Node> node_;
};

/// A circuit as it appears in an oracle query: plain or tensor-wrapped.
using AnyCircuit = std::variant<Circuit, TensorPower>;

inline std::uint64_t arity(const AnyCircuit& c) {
  if (const auto* plain = std::get_if<Circuit>(&c)) return plain->num_inputs();
  return std::get<TensorPower>(c).logical_arity();
}

inline const BigNat& count_exact(const Circuit& c,
                                 unsigned cap = kDefaultBruteForceCap) {
  return c.count(cap);
}

inline const BigNat& count_exact(const TensorPower& t,
                                 unsigned cap = kDefaultBruteForceCap) {
  return t.count(cap);
}

inline const BigNat& count_exact(const AnyCircuit& c,
                                 unsigned cap = kDefaultBruteForceCap) {
  if (const auto* plain = std::get_if<Circuit>(&c)) return plain->count(cap);
  return std::get<TensorPower>(c).count(cap);
}

/// Serialized query text: plain circuits use their canonical text, tensor
/// powers prepend a "tensor <k>" line to the base text.
inline std::string query_text(const AnyCircuit& c) {
  if (const auto* plain = std::get_if<Circuit>(&c)) return plain->text();
  const auto& t = std::get<TensorPower>(c);
  return "tensor " + std::to_string(t.k()) + "\n" + t.base().text();
}

inline std::uint64_t query_circuit_hash(const AnyCircuit& c) {
  if (const auto* plain = std::get_if<Circuit>(&c)) return plain->content_hash();
  const auto& t = std::get<TensorPower>(c);
  return fnv1a64(t.base().text(),
                 fnv1a64("tensor " + std::to_string(t.k()) + "\n"));
}

/// A 2n-input circuit read as an ordering relation on n-bit strings:
/// x < y iff E(x, y) = 1 with x on inputs 0..n-1 and y on inputs n..2n-1.
/// Whether it is a strict linear order is a property, not an invariant.
class OrderCircuit {
 public:
  OrderCircuit(unsigned n, Circuit circuit)
      : n_(n), circuit_(std::move(circuit)) {
    if (n == 0) throw RejectedInputError("order requires n >= 1");
    if (circuit_.num_inputs() != 2 * n)
      throw RejectedInputError(
          "order circuit arity " + std::to_string(circuit_.num_inputs()) +
          " is not 2n = " + std::to_string(2 * n));
  }

  unsigned n() const { return n_; }
  const Circuit& circuit() const { return circuit_; }

  bool less(const BitString& x, const BitString& y) const {
    if (x.size() != n_ || y.size() != n_)
      throw RejectedInputError("order comparison on wrong-length strings");
    return circuit_.eval(x + y);
  }

 private:
  unsigned n_;
  Circuit circuit_;
};

/// Arity-n circuit for {x : x < alpha} under E.
inline Circuit build_strictly_below(const OrderCircuit& e,
                                    const BitString& alpha) {
  if (alpha.size() != e.n())
    throw RejectedInputError("alpha length " + std::to_string(alpha.size()) +
                             " does not match order n = " +
                             std::to_string(e.n()));
  const unsigned n = e.n();
  CircuitBuilder b(n);
  std::uint32_t out = b.append(e.circuit(), [&](std::uint32_t j) -> Gate {
    if (j < n) return Gate{GateKind::Input, j, 0};
    return Gate{GateKind::Const, alpha[j - n] ? 1u : 0u, 0};
  });
  return b.build(out);
}

/// Arity-n circuit for the down-set {x : x < alpha} ∪ {alpha}:
/// C(x) = E(x, alpha) ∨ (x = alpha).
inline Circuit build_downset(const OrderCircuit& e, const BitString& alpha) {
  if (alpha.size() != e.n())
    throw RejectedInputError("alpha length " + std::to_string(alpha.size()) +
                             " does not match order n = " +
                             std::to_string(e.n()));
  const unsigned n = e.n();
  CircuitBuilder b(n);
  std::uint32_t below = b.append(e.circuit(), [&](std::uint32_t j) -> Gate {
    if (j < n) return Gate{GateKind::Input, j, 0};
    return Gate{GateKind::Const, alpha[j - n] ? 1u : 0u, 0};
  });
  std::uint32_t eq = b.equals_constant(alpha);
  return b.build(b.or_gate(below, eq));
}

/// Arity-2n circuit D(x, y) = C(y) ∧ E(x, y); its count is |C| · rank(C).
inline Circuit build_rank_pairs(const Circuit& c, const OrderCircuit& e) {
  if (c.num_inputs() != e.n())
    throw RejectedInputError("set circuit arity " +
                             std::to_string(c.num_inputs()) +
                             " does not match order n = " +
                             std::to_string(e.n()));
  const unsigned n = e.n();
  CircuitBuilder b(2 * n);
  std::uint32_t c_out = b.append(c, [&](std::uint32_t j) -> Gate {
    return Gate{GateKind::Input, j + n, 0};  // C reads the y block
  });
  std::uint32_t e_out = b.append(e.circuit(), [](std::uint32_t j) -> Gate {
    return Gate{GateKind::Input, j, 0};
  });
  return b.build(b.and_gate(c_out, e_out));
}

// ---------------------------------------------------------------------------
// Text format
//
//   circuit <num_inputs>
//   g0 = INPUT 0
//   g1 = CONST 1
//   g2 = AND g0 g1          (also OR, XOR, NOT with one operand)
//   output g2
//
// Gate ids must be dense and in topological order; operands must reference
// earlier gates. Order instances prepend a line "order <n>" to a circuit
// block with exactly 2n inputs.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_number(std::string_view tok, std::size_t line) {
  if (tok.empty()) throw ParseError(line, "expected a number");
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 0xFFFFFFFFull) throw ParseError(line, "number out of range");
  }
  return v;
}

inline std::uint32_t parse_gate_ref(std::string_view tok, std::size_t defined,
                                    std::size_t line) {
  if (tok.size() < 2 || tok[0] != 'g')
    throw ParseError(line, "expected a gate reference like g3, got '" +
                               std::string(tok) + "'");
  std::uint64_t id = parse_number(tok.substr(1), line);
  if (id == defined)
    throw ParseError(line, "cycle: gate g" + std::to_string(id) +
                               " references itself");
  if (id > defined)
    throw ParseError(line, "dangling reference to undefined gate g" +
                               std::to_string(id));
  return static_cast<std::uint32_t>(id);
}

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  /// Next non-empty line, or nullopt at end of input.
  std::optional<std::string_view> next() {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) return line;
    }
    return std::nullopt;
  }
};

inline Circuit parse_circuit_block(LineReader& r) {
  auto header = r.next();
  if (!header) throw ParseError(r.line_no, "missing 'circuit <n>' header");
  auto toks = split_ws(*header);
  if (toks.size() != 2 || toks[0] != "circuit")
    throw ParseError(r.line_no, "expected 'circuit <num_inputs>'");
  unsigned n = static_cast<unsigned>(parse_number(toks[1], r.line_no));

  CircuitBuilder b(n);
  std::size_t defined = 0;
  while (true) {
    auto line = r.next();
    if (!line) throw ParseError(r.line_no, "missing 'output g<i>' line");
    toks = split_ws(*line);
    if (toks[0] == "output") {
      if (toks.size() != 2)
        throw ParseError(r.line_no, "expected 'output g<i>'");
      std::uint32_t out = parse_gate_ref(toks[1], defined, r.line_no);
      if (defined == 0)
        throw ParseError(r.line_no, "circuit has no gates");
      return b.build(out);
    }
    if (toks.size() < 3 || toks[1] != "=")
      throw ParseError(r.line_no, "expected 'g<i> = <OP> ...'");
    if (toks[0].size() < 2 || toks[0][0] != 'g' ||
        parse_number(toks[0].substr(1), r.line_no) != defined)
      throw ParseError(r.line_no, "gate ids must be dense: expected g" +
                                      std::to_string(defined));
    std::string_view op = toks[2];
    try {
      if (op == "INPUT") {
        if (toks.size() != 4) throw ParseError(r.line_no, "INPUT takes one index");
        b.input(static_cast<std::uint32_t>(parse_number(toks[3], r.line_no)));
      } else if (op == "CONST") {
        if (toks.size() != 4 || (toks[3] != "0" && toks[3] != "1"))
          throw ParseError(r.line_no, "CONST takes 0 or 1");
        b.constant(toks[3] == "1");
      } else if (op == "NOT") {
        if (toks.size() != 4) throw ParseError(r.line_no, "NOT takes one operand");
        b.not_gate(parse_gate_ref(toks[3], defined, r.line_no));
      } else if (op == "AND" || op == "OR" || op == "XOR") {
        if (toks.size() != 5)
          throw ParseError(r.line_no, std::string(op) + " takes two operands");
        std::uint32_t x = parse_gate_ref(toks[3], defined, r.line_no);
        std::uint32_t y = parse_gate_ref(toks[4], defined, r.line_no);
        if (op == "AND") b.and_gate(x, y);
        else if (op == "OR") b.or_gate(x, y);
        else b.xor_gate(x, y);
      } else {
        throw ParseError(r.line_no, "unknown gate op '" + std::string(op) + "'");
      }
    } catch (const RejectedInputError& e) {
      throw ParseError(r.line_no, e.what());
    }
    ++defined;
  }
}

}  // namespace detail

inline Circuit parse_circuit(std::string_view text) {
  detail::LineReader r{text};
  Circuit c = detail::parse_circuit_block(r);
  if (auto extra = r.next())
    throw ParseError(r.line_no, "trailing content after 'output'");
  return c;
}

inline std::string serialize(const Circuit& c) { return c.text(); }

inline std::string serialize(const OrderCircuit& e) {
  return "order " + std::to_string(e.n()) + "\n" + e.circuit().text();
}

inline OrderCircuit parse_order(std::string_view text) {
  detail::LineReader r{text};
  auto header = r.next();
  if (!header) throw ParseError(r.line_no, "missing 'order <n>' header");
  auto toks = detail::split_ws(*header);
  if (toks.size() != 2 || toks[0] != "order")
    throw ParseError(r.line_no, "expected 'order <n>'");
  unsigned n = static_cast<unsigned>(detail::parse_number(toks[1], r.line_no));
  Circuit c = detail::parse_circuit_block(r);
  if (auto extra = r.next())
    throw ParseError(r.line_no, "trailing content after 'output'");
  if (c.num_inputs() != 2 * n)
    throw ParseError(r.line_no, "order circuit must have 2n = " +
                                    std::to_string(2 * n) + " inputs, has " +
                                    std::to_string(c.num_inputs()));
  return OrderCircuit(n, c);
}

}  // namespace loplab
