#include <cstdint>

#include "doctest.h"
#include "helpers.hpp"
#include "loplab/loplab.hpp"

using namespace loplab;
using namespace loplab::testing;

namespace {

Circuit const_circuit(unsigned n, bool bit) {
  CircuitBuilder b(n);
  return b.build(b.constant(bit));
}

Circuit and2() {
  CircuitBuilder b(2);
  std::uint32_t x0 = b.input(0);
  std::uint32_t x1 = b.input(1);
  return b.build(b.and_gate(x0, x1));
}

Circuit single_input(unsigned n, unsigned which) {
  CircuitBuilder b(n);
  return b.build(b.input(which));
}

}  // namespace

TEST_CASE("eval on constants and AND") {
  Circuit zero = const_circuit(3, false);
  for (std::uint64_t v = 0; v < 8; ++v)
    CHECK(!zero.eval(BitString::from_index(v, 3)));

  Circuit c = and2();
  CHECK(c.eval(BitString::from_string("11")));
  CHECK(!c.eval(BitString::from_string("10")));
  CHECK(!c.eval(BitString::from_string("01")));
}

TEST_CASE("eval rejects arity mismatch") {
  CHECK_THROWS_AS(and2().eval(BitString::from_string("101")),
                  RejectedInputError);
}

TEST_CASE("builder validates references and input indices") {
  CircuitBuilder b(2);
  std::uint32_t g = b.input(0);
  CHECK_THROWS_AS(b.input(2), RejectedInputError);
  CHECK_THROWS_AS(b.not_gate(5), RejectedInputError);
  CHECK_THROWS_AS(b.and_gate(g, 9), RejectedInputError);
}

TEST_CASE("eval_all agrees with single evaluation") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    unsigned n = 1 + seed % 8;
    Circuit c = random_circuit(n, 24, seed);
    std::vector<std::uint64_t> table = c.eval_all();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      bool expected = c.eval(BitString::from_index(v, n));
      CHECK(((table[v >> 6] >> (v & 63)) & 1) == (expected ? 1 : 0));
    }
  }
}

TEST_CASE("count_exact basics") {
  CHECK(count_exact(const_circuit(3, false)) == BigNat{0});
  CHECK(count_exact(const_circuit(3, true)) == BigNat{8});
  CHECK(count_exact(single_input(3, 0)) == BigNat{4});
}

TEST_CASE("count_exact matches one-by-one enumeration on random circuits") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    unsigned n = 1 + seed % 10;
    Circuit c = random_circuit(n, 30, seed);
    CHECK(count_exact(c) == BigNat{brute_count(c)});
  }
}

TEST_CASE("count_exact enforces the brute-force limit by name") {
  Circuit wide = single_input(12, 3);
  CHECK_THROWS_AS(count_exact(wide, 10), CapacityError);
  try {
    count_exact(wide, 10);
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
  CHECK(count_exact(wide, 12) == BigNat{2048});
}

TEST_CASE("restriction pins the chosen position") {
  // forcing x0 = 1 in AND(x0, x1) leaves exactly the assignment 11
  Circuit r = restrict_input(and2(), 0, true);
  CHECK(r.num_inputs() == 2);
  CHECK(count_exact(r) == BigNat{1});
  CHECK(r.eval(BitString::from_string("11")));
  CHECK(!r.eval(BitString::from_string("01")));

  CHECK_THROWS_AS(restrict_input(and2(), 2, true), RejectedInputError);
}

TEST_CASE("restricting every position leaves the membership of that point") {
  Rng rng(5);
  for (int round = 0; round < 20; ++round) {
    unsigned n = 3 + round % 3;
    Circuit c = random_circuit(n, 20, rng.next());
    BitString point = rng.next_bits(n);
    Circuit fixed = c;
    for (unsigned i = 0; i < n; ++i)
      fixed = restrict_input(fixed, i, point[i] != 0);
    std::uint64_t membership = c.eval(point) ? 1 : 0;
    CHECK(count_exact(fixed) == BigNat{membership});
  }
}

TEST_CASE("restriction splits counts") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Circuit c = random_circuit(8, 40, seed);
    for (unsigned i : {0u, 3u, 7u}) {
      std::uint64_t whole = brute_count(c);
      std::uint64_t zero = brute_count(restrict_input(c, i, false));
      std::uint64_t one = brute_count(restrict_input(c, i, true));
      CHECK(whole == zero + one);
    }
  }
}

TEST_CASE("tensor power counts by exponentiation") {
  // base with count 5 over 3 inputs: x0 ∨ (x1 ∧ x2) has 5 models
  CircuitBuilder b(3);
  std::uint32_t x0 = b.input(0);
  std::uint32_t x1 = b.input(1);
  std::uint32_t x2 = b.input(2);
  Circuit base = b.build(b.or_gate(x0, b.and_gate(x1, x2)));
  REQUIRE(count_exact(base) == BigNat{5});

  TensorPower cubed(base, 3);
  CHECK(cubed.logical_arity() == 9);
  CHECK(count_exact(cubed) == BigNat{125});
  CHECK(count_exact(cubed) == BigNat{brute_count(expand_tensor(base, 3))});

  CHECK_THROWS_AS(TensorPower(base, 0), RejectedInputError);
}

TEST_CASE("tensor identity against product enumeration") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    unsigned n = 1 + seed % 10;
    Circuit base = random_circuit(n, 15, seed + 77);
    BigNat base_count = count_exact(base);
    for (unsigned k = 1; k <= 4; ++k) {
      TensorPower t(base, k);
      CHECK(count_exact(t) == BigNat::pow(base_count, k));
      if (n * k <= 20)
        CHECK(count_exact(t) == BigNat{brute_count(expand_tensor(base, k))});
    }
  }
}

TEST_CASE("down-set circuits") {
  GeneratedOrder lex = generate(OrderSpec::make(OrderKind::Lex, 2));
  CHECK(count_exact(build_downset(lex.order, BitString::from_string("00"))) ==
        BigNat{1});
  CHECK(count_exact(build_downset(lex.order, BitString::from_string("11"))) ==
        BigNat{4});
  CHECK_THROWS_AS(build_downset(lex.order, BitString::from_string("111")),
                  RejectedInputError);
}

TEST_CASE("rank-pair circuits") {
  GeneratedOrder lex = generate(OrderSpec::make(OrderKind::Lex, 2));

  CircuitBuilder m(2);
  Circuit minimum_only = m.build(m.equals_constant(BitString::from_string("00")));
  CHECK(count_exact(build_rank_pairs(minimum_only, lex.order)) == BigNat{0});

  Circuit cube = const_circuit(2, true);
  CHECK(count_exact(build_rank_pairs(cube, lex.order)) == BigNat{6});

  CHECK_THROWS_AS(build_rank_pairs(const_circuit(3, true), lex.order),
                  RejectedInputError);
}

TEST_CASE("rank-pair count equals the sum of member ranks") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    unsigned n = 2 + seed % 3;
    GeneratedOrder g = generate(OrderSpec::make(OrderKind::Xor, n, seed));
    Circuit subset = random_circuit(n, 12, seed + 1000);
    std::uint64_t expected = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      BitString y = BitString::from_index(v, n);
      if (subset.eval(y)) expected += brute_rank(g.order, y);
    }
    CHECK(count_exact(build_rank_pairs(subset, g.order)) == BigNat{expected});
  }
}

TEST_CASE("serialize/parse round trip preserves behavior") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    unsigned n = 1 + seed % 6;
    Circuit c = random_circuit(n, 25, seed);
    Circuit back = parse_circuit(serialize(c));
    CHECK(back.num_inputs() == n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      BitString a = BitString::from_index(v, n);
      CHECK(c.eval(a) == back.eval(a));
    }
    // byte-identical second round trip
    CHECK(serialize(back) == serialize(c));
  }
}

TEST_CASE("canonical text of a small circuit") {
  CHECK(serialize(and2()) ==
        "circuit 2\n"
        "g0 = INPUT 0\n"
        "g1 = INPUT 1\n"
        "g2 = AND g0 g1\n"
        "output g2\n");
  Circuit c = parse_circuit(serialize(and2()));
  CHECK(c.eval(BitString::from_string("11")));
}

TEST_CASE("order instances round trip") {
  GeneratedOrder g = generate(OrderSpec::make(OrderKind::Affine, 3, 9));
  OrderCircuit back = parse_order(serialize(g.order));
  CHECK(back.n() == 3);
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 8; ++y) {
      BitString xs = BitString::from_index(x, 3), ys = BitString::from_index(y, 3);
      CHECK(g.order.less(xs, ys) == back.less(xs, ys));
    }
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, std::size_t line,
                         const char* needle) {
    try {
      parse_circuit(text);
      FAIL_CHECK("expected a parse error for:\n" << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("circuit 2\ng0 = FROB 1\noutput g0\n", 2, "unknown gate op");
  expect_error("circuit 2\ng0 = INPUT 0\ng1 = NOT g5\noutput g1\n", 3,
               "dangling");
  expect_error("circuit 2\ng0 = INPUT 0\ng1 = AND g1 g0\noutput g1\n", 3,
               "cycle");
  expect_error("circuit 2\ng7 = INPUT 0\noutput g7\n", 2, "dense");
  expect_error("circuit 2\ng0 = INPUT 0\n", 2, "output");
  expect_error("circuit 2\ng0 = INPUT 9\noutput g0\n", 2, "out of range");
  expect_error("banana\n", 1, "circuit");
}

TEST_CASE("parse rejects trailing garbage and bad order headers") {
  CHECK_THROWS_AS(parse_circuit("circuit 1\ng0 = INPUT 0\noutput g0\nxxx\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_order("order 2\ncircuit 3\ng0 = INPUT 0\noutput g0\n"),
                  ParseError);
}
