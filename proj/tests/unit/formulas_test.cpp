#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "bsnet/error.hpp"
#include "bsnet/formula.hpp"
#include "bsnet/verify.hpp"

using namespace bsnet;

namespace {

Literal pos(std::size_t v) { return {v, false}; }
Literal neg(std::size_t v) { return {v, true}; }

}  // namespace

TEST_CASE("DIMACS parsing") {
  const Cnf3Formula one = parse_dimacs("p cnf 3 1\n1 2 -3 0\n");
  CHECK(one.variable_count() == 3);
  REQUIRE(one.clause_count() == 1);
  CHECK(one.clauses()[0] == Clause{pos(0), pos(1), neg(2)});

  const Cnf3Formula three = parse_dimacs(
      "c five variables\np cnf 5 3\n1 2 -3 0\n-2 4 -5 0\n-1 -4 5 0\n");
  CHECK(three == three_clause_formula());

  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);
  const Cnf3Formula padded = parse_dimacs("p cnf 2 1\n1 2 0\n", true);
  CHECK(padded.clauses()[0] == Clause{pos(0), pos(1), pos(1)});

  CHECK_THROWS(parse_dimacs("p cnf 2 2\n1 2 2 0\n"));
  CHECK_THROWS(parse_dimacs("p cnf 2 1\n1 2 3 0\n"));
  CHECK(parse_dimacs(to_dimacs(three)) == three);
}

TEST_CASE("formula evaluation") {
  const Cnf3Formula psi = three_clause_formula();
  CHECK(eval_formula(psi, Assignment{0b11111}));
  const Cnf3Formula taut(2, {{pos(0), neg(0), pos(1)}});
  for (Assignment a = 0; a < 4; ++a) CHECK(eval_formula(taut, a));
  CHECK_THROWS_AS(eval_formula(psi, PartialAssignment{{0, true}}), StructureError);
}

TEST_CASE("substitution") {
  const Cnf3Formula psi = three_clause_formula();
  const Cnf same = substitute(psi, {});
  REQUIRE(same.clauses.size() == psi.clause_count());
  for (std::size_t j = 0; j < psi.clause_count(); ++j) {
    CHECK(same.clauses[j] == std::vector<Literal>(psi.clauses()[j].begin(), psi.clauses()[j].end()));
  }

  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const Cnf3Formula f = random_formula(rng, n, rng() % 8);
    PartialAssignment v;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 2) v[i] = rng() % 2;
    }
    const Cnf g = substitute(f, v);
    const Assignment rest = rng() & low_mask(n);
    Assignment full = rest;
    for (const auto& [i, b] : v) full = b ? (full | (Word{1} << i)) : (full & ~(Word{1} << i));
    REQUIRE(eval_formula(g, rest) == oracle::satisfies(f, full));
  }
}

TEST_CASE("satisfiability oracle") {
  const Cnf3Formula psi = three_clause_formula();
  REQUIRE(sat_oracle(psi).has_value());
  CHECK(eval_formula(psi, *sat_oracle(psi)));
  CHECK(eval_formula(psi, Assignment{0b11111}));
  CHECK_FALSE(sat_oracle(Cnf3Formula(1, {{pos(0), pos(0), pos(0)}, {neg(0), neg(0), neg(0)}})).has_value());
  CHECK(sat_oracle(Cnf3Formula(3, {})) == Assignment{0});
  CHECK_THROWS_AS(sat_oracle(Cnf3Formula(25, {})), SizeError);

  // Lexicographically first with lambda_1 most significant: lambda_1 = 0 is
  // preferred when possible.
  const Cnf3Formula need2(2, {{pos(1), pos(1), pos(1)}});
  CHECK(sat_oracle(need2) == Assignment{0b10});

  std::mt19937_64 rng(37);
  for (int t = 0; t < 500; ++t) {
    const Cnf3Formula f = random_formula(rng, 1 + rng() % 4, rng() % 8);
    const auto a = sat_oracle(f);
    REQUIRE(a.has_value() == oracle::satisfiable(f));
    REQUIRE(exists_forall_oracle(f, f.variable_count()).has_value() == a.has_value());
  }
}

TEST_CASE("exists-forall oracle") {
  const Cnf3Formula psi(2, {{pos(0), pos(0), pos(1)}, {pos(0), pos(0), neg(1)}});
  CHECK(exists_forall_oracle(psi, 1) == Assignment{1});
  CHECK_FALSE(exists_forall_oracle(psi, 0).has_value());

  const Cnf3Formula taut(2, {{pos(0), neg(0), pos(1)}});
  CHECK(exists_forall_oracle(taut, 0).has_value());

  std::mt19937_64 rng(41);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Cnf3Formula f = random_formula(rng, n, rng() % 6);
    const std::size_t s = rng() % (n + 1);
    const auto v = exists_forall_oracle(f, s);
    REQUIRE(v.has_value() == oracle::exists_forall(f, s));
    if (v) {
      for (Assignment u = 0; u < (Assignment{1} << (n - s)); ++u) REQUIRE(oracle::satisfies(f, *v | (u << s)));
    }
  }
}
