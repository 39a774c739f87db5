#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "bsnet/digraph.hpp"
#include "bsnet/error.hpp"
#include "bsnet/network_io.hpp"
#include "bsnet/reductions.hpp"
#include "bsnet/update.hpp"
#include "bsnet/verify.hpp"

using namespace bsnet;

namespace {

Configuration cfg(const char* s) { return Configuration::parse(s); }

BooleanNetwork identity_network(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Expr> locals;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i + 1));
    locals.push_back(Expr::variable(i));
  }
  return BooleanNetwork(names, locals);
}

void require_same_tables(const BooleanNetwork& a, const BooleanNetwork& b) {
  REQUIRE(a.size() == b.size());
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << a.size()); ++w) {
    const auto x = oracle::bits_of(w, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(oracle::eval(a.local(i), x) == oracle::eval(b.local(i), x));
  }
}

}  // namespace

TEST_CASE("eval_expr basics") {
  CHECK(eval_expr(Expr::constant(true), cfg("000")));
  CHECK(eval_expr(Expr::variable(1), cfg("010")));
  CHECK_FALSE(eval_expr(Expr::variable(0) ^ Expr::variable(1), cfg("11")));
  CHECK_THROWS_AS(eval_expr(Expr::variable(3), cfg("010")), StructureError);
}

TEST_CASE("configuration text puts component 1 first") {
  const Configuration x = cfg("001");
  CHECK(x.size() == 3);
  CHECK(x[2]);
  CHECK_FALSE(x[0]);
  CHECK(x.to_string() == "001");
  CHECK(x.flipped(0).to_string() == "101");
  CHECK_THROWS_AS(cfg("01a"), ParseError);
}

TEST_CASE("step_subset and step_schedule examples") {
  const BooleanNetwork f = swap_network();
  const BooleanNetwork g = rotation_network();
  const std::size_t first[] = {0};
  CHECK(step_subset(g, first, cfg("001")) == cfg("101"));
  CHECK(step_subset(g, {}, cfg("011")) == cfg("011"));
  const std::size_t all[] = {0, 1, 2};
  CHECK(step_subset(g, all, cfg("001")) == step_schedule(g, UpdateSchedule::parallel(3), cfg("001")));

  const UpdateSchedule w = parse_schedule("{x1}>{x2,x3}", g.names());
  CHECK(step_schedule(g, w, cfg("001")) == cfg("110"));
  CHECK(step_schedule(g, w, cfg("110")) == cfg("001"));
  CHECK(step_schedule(f, parse_schedule("{x1}>{x2}", f.names()), cfg("01")) == cfg("11"));
}

TEST_CASE("step_schedule agrees with the reference stepper") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const BooleanNetwork f = random_network(rng, n);
    const UpdateSchedule w = sample_schedule(n, rng);
    const std::uint64_t x = rng() & low_mask(n);
    const auto want = oracle::step(f, w.blocks(), oracle::bits_of(x, n));
    REQUIRE(step_schedule(f, w, Configuration(n, x)).bits() == oracle::word_of(want));
    REQUIRE(Stepper(f, w)(x) == oracle::word_of(want));
  }
}

TEST_CASE("parallelize") {
  const BooleanNetwork g = rotation_network();
  require_same_tables(parallelize(g, UpdateSchedule::parallel(3)), g);

  const UpdateSchedule w = parse_schedule("{x1}>{x2,x3}", g.names());
  const BooleanNetwork p = parallelize(g, w);
  CHECK(step_schedule(p, UpdateSchedule::parallel(3), cfg("001")) == cfg("110"));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const BooleanNetwork f = random_network(rng, 5);
    const UpdateSchedule v = sample_schedule(5, rng);
    const BooleanNetwork q = parallelize(f, v);
    for (std::uint64_t x = 0; x < 32; ++x) {
      REQUIRE(oracle::step(q, oracle::parallel(5), oracle::bits_of(x, 5)) ==
              oracle::step(f, v.blocks(), oracle::bits_of(x, 5)));
    }
  }
}

TEST_CASE("interaction digraph examples") {
  const SignedDigraph id = interaction_digraph(identity_network(3));
  CHECK(id.arcs().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(id.sign(i, i) == Sign::positive);

  const SignedDigraph neg = interaction_digraph(parse_bn("a := !a"));
  REQUIRE(neg.arcs().size() == 1);
  CHECK(neg.sign(0, 0) == Sign::negative);

  const ReductionArtifact a = reduce_klc(three_clause_formula(), 4);
  const SignedDigraph g = interaction_digraph(a.network);
  const std::size_t c1 = a.component(Role::Kind::clause, 1);
  CHECK(g.sign(a.component(Role::Kind::lambda, 3), c1) == Sign::negative);
  CHECK(g.sign(a.component(Role::Kind::lambda, 1), c1) == Sign::positive);

  CHECK(to_string(Sign::both) == "+-");
  CHECK_THROWS_AS(interaction_digraph(identity_network(5), 4), SizeError);
}

TEST_CASE("interaction digraph matches the flip-everything reference") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const BooleanNetwork f = random_network(rng, 1 + rng() % 6);
    const SignedDigraph g = interaction_digraph(f);
    const auto want = oracle::digraph(f);
    REQUIRE(g.arcs().size() == want.size());
    for (const auto& [arc, mask] : want) {
      const Sign s = mask == 1 ? Sign::positive : mask == 2 ? Sign::negative : Sign::both;
      REQUIRE(g.sign(arc.first, arc.second) == s);
    }
  }
}

TEST_CASE("DOT output marks signs") {
  const BooleanNetwork f = parse_bn("a := !b\nb := a ^ b\n");
  const std::string dot = to_dot(interaction_digraph(f), f);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("arrowhead=tee") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
}

TEST_CASE("truth table export") {
  const auto one = truth_table_export(parse_bn("a := b\nb := 1\n"));
  CHECK(one[0].inputs == std::vector<std::size_t>{1});
  CHECK(one[0].table == std::vector<bool>{false, true});
  CHECK(one[1].inputs.empty());
  CHECK(one[1].table == std::vector<bool>{true});

  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Cnf3Formula psi = random_formula(rng, 1 + rng() % 5, rng() % 5);
    const ReductionArtifact a = reduce_klc(psi, 1 + rng() % 4);
    const auto tables = truth_table_export(a.network);
    for (std::size_t c : a.components(Role::Kind::clause)) REQUIRE(tables[c].inputs.size() <= 3);
  }
  CHECK_THROWS_AS(truth_table_export(parse_bn("a := b & c\nb := b\nc := c\n"), 1), SizeError);
}

TEST_CASE("network text format") {
  const BooleanNetwork f = parse_bn("# swap\na := b\nb := a\n");
  REQUIRE(f.size() == 2);
  CHECK(f.name(0) == "a");
  CHECK(f.local(0).op() == Expr::Op::variable);
  CHECK(f.local(0).index() == 1);
  CHECK(f.local(1).index() == 0);

  CHECK_THROWS_AS(parse_bn("a := a &"), ParseError);
  CHECK_THROWS_AS(parse_bn("a := b"), ParseError);
  CHECK_THROWS_AS(parse_bn("a := 1\na := 0"), ParseError);
  try {
    parse_bn("a := 1\nb := (a");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  const BooleanNetwork g = parse_bn("x' := !(y | 0) ^ x'\ny := x' & y & 1\n");
  CHECK(g.name(0) == "x'");
  require_same_tables(parse_bn(serialize_bn(g)), g);
}

TEST_CASE("serialize then parse preserves truth tables") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const BooleanNetwork f = random_network(rng, 1 + rng() % 10, 3);
    const std::string text = serialize_bn(f);
    const BooleanNetwork g = parse_bn(text);
    CHECK(g.names() == f.names());
    CHECK(serialize_bn(g) == text);
    if (f.size() <= 8) require_same_tables(f, g);
  }
}
