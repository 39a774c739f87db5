#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "bsnet/digraph.hpp"
#include "bsnet/dynamics.hpp"
#include "bsnet/error.hpp"
#include "bsnet/network_io.hpp"
#include "bsnet/reductions.hpp"
#include "bsnet/verify.hpp"

using namespace bsnet;

namespace {

Literal pos(std::size_t v) { return {v, false}; }
Literal neg(std::size_t v) { return {v, true}; }

// Positive instance with its existential witness.
std::pair<Cnf3Formula, Assignment> positive(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t s) {
  while (true) {
    auto psi = random_instance(rng, n, m, s, true);
    if (psi) return {*psi, *exists_forall_oracle(*psi, s)};
  }
}

// Every attractor keeps the listed components constant.
bool constant_on_attractors(const AttractorReport& r, const std::vector<std::size_t>& components) {
  for (const auto& [len, list] : r.by_length()) {
    for (const auto& a : list) {
      for (std::size_t c : components) {
        for (const auto& x : a.cycle) {
          if (x[c] != a.cycle.front()[c]) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> universal_lambdas(const ReductionArtifact& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = a.s + 1; i <= a.source.variable_count(); ++i) out.push_back(a.component(Role::Kind::lambda, i));
  return out;
}

}  // namespace

TEST_CASE("construction sizes and component order") {
  const Cnf3Formula psi = three_clause_formula();
  const ReductionArtifact klc = reduce_klc(psi, 4);
  CHECK(klc.network.size() == 12);
  CHECK(klc.network.name(0) == "lambda1");
  CHECK(klc.network.name(5) == "C1");
  CHECK(klc.network.name(8) == "psi1");

  const ReductionArtifact even = reduce_bs_no_klc_even(psi, 3, 4);
  CHECK(even.network.size() == 20);
  CHECK(reduce_bs_no_klc_2(psi, 3).network.size() == 16);

  const ReductionArtifact general = reduce_bs_no_klc_general(psi, 3, 5);
  CHECK(general.network.size() == 32);
  CHECK(general.components(Role::Kind::schedule_bit).size() == 13);
  CHECK(general.network.name(general.component(Role::Kind::schedule_bit, 13)) == "omega13");

  for (const auto& a : {klc, even, general}) {
    REQUIRE(a.roles.size() == a.network.size());
    for (std::size_t c = 0; c < a.roles.size(); ++c) CHECK(a.network.name(c) == role_name(a.roles[c]));
  }
}

TEST_CASE("construction preconditions") {
  const Cnf3Formula psi = three_clause_formula();
  CHECK_THROWS_AS(reduce_klc(psi, 0), ConstructionError);
  CHECK_THROWS_AS(reduce_bs_no_klc_even(psi, 3, 5), ConstructionError);
  CHECK_THROWS_AS(reduce_bs_no_klc_even(psi, 3, 2), ConstructionError);
  CHECK_THROWS_AS(reduce_bs_no_klc_even(psi, 0, 4), ConstructionError);
  CHECK_THROWS_AS(reduce_bs_no_klc_2(psi, 6), ConstructionError);
  CHECK_THROWS_AS(reduce_bs_no_klc_general(psi, 3, 2), ConstructionError);
  CHECK_THROWS_AS(reduce_bs_no_klc_general(psi, 0, 3), ConstructionError);
}

TEST_CASE("k-LC witness configuration") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const Cnf3Formula psi = random_formula(rng, 1 + rng() % 5, rng() % 5);
    const auto v = sat_oracle(psi);
    if (!v) continue;
    const std::size_t k = 1 + rng() % 5;
    const ReductionArtifact a = reduce_klc(psi, k);
    REQUIRE(is_in_k_cycle(a.network, UpdateSchedule::parallel(a.network.size()), klc_witness_configuration(a, *v), k));
  }
}

TEST_CASE("k-LC reduction agrees with satisfiability") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 150; ++t) {
    const Cnf3Formula psi = random_formula(rng, 1 + rng() % 3, rng() % 4);
    const std::size_t k = 1 + rng() % 3;
    const ReductionArtifact a = reduce_klc(psi, k);
    REQUIRE((oracle::phi(a.network, oracle::parallel(a.network.size()), k) >= 1) == oracle::satisfiable(psi));
  }
}

TEST_CASE("signs of the clause arcs") {
  const ReductionArtifact a = reduce_klc(three_clause_formula(), 4);
  const auto arcs = oracle::digraph(a.network);
  const std::size_t c1 = a.component(Role::Kind::clause, 1);
  CHECK(arcs.at({a.component(Role::Kind::lambda, 3), c1}) == 2);
  CHECK(arcs.at({a.component(Role::Kind::lambda, 1), c1}) == 1);
  CHECK(arcs.at({a.component(Role::Kind::lambda, 2), c1}) == 1);
}

TEST_CASE("signs around the general clock") {
  const ReductionArtifact a = reduce_bs_no_klc_general(Cnf3Formula(2, {{pos(0), pos(1), neg(1)}}), 1, 3);
  const SignedDigraph g = interaction_digraph(a.network);
  const std::size_t stop = a.component(Role::Kind::stop);
  for (std::size_t i = 0; i <= 3; ++i) {
    const std::size_t om = a.component(Role::Kind::clock_indexed, i);
    CHECK(g.sign(stop, om) == Sign::negative);
    bool mixed = false;
    for (std::size_t b : a.components(Role::Kind::schedule_bit)) mixed = mixed || g.sign(b, om) == Sign::both;
    CHECK(mixed);
  }
  CHECK(g.sign(a.component(Role::Kind::psi), stop) == Sign::positive);
}

TEST_CASE("even construction witness schedule") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t s = 1 + rng() % n;
    const auto [psi, v] = positive(rng, n, 1 + rng() % 3, s);
    const ReductionArtifact a = reduce_bs_no_klc_even(psi, s, 4);
    const UpdateSchedule w = witness_schedule_even(a, v);
    const AttractorReport r = attractors(a.network, w);
    REQUIRE(r.phi(4) == 0);
    REQUIRE(r.by_length().size() == 1);
    REQUIRE(r.by_length().begin()->first == 2);
    for (const auto& [len, list] : r.by_length()) {
      for (const auto& att : list) {
        for (const auto& x : att.cycle) {
          for (std::size_t i = 0; i < s; ++i) REQUIRE(x[a.component(Role::Kind::lambda, i + 1)] == (((v >> i) & 1u) != 0));
        }
      }
    }
    REQUIRE(constant_on_attractors(r, universal_lambdas(a)));
  }
  const ReductionArtifact a = reduce_bs_no_klc_even(three_clause_formula(), 3, 4);
  const std::size_t blocks = witness_schedule_even(a, 0b111).block_count();
  CHECK((blocks == 3 || blocks == 4));
}

TEST_CASE("two-cycle construction witness schedule") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t s = 1 + rng() % 2;
    const auto [psi, v] = positive(rng, n, 1 + rng() % 4, s);
    const ReductionArtifact a = reduce_bs_no_klc_2(psi, s);
    const AttractorReport r = attractors(a.network, witness_schedule_even(a, v));
    REQUIRE(r.total() == r.phi(1));
    REQUIRE(constant_on_attractors(r, universal_lambdas(a)));
  }
}

TEST_CASE("general construction witness schedule") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 5; ++t) {
    const auto [psi, v] = positive(rng, 2, 1 + rng() % 3, 1);
    const ReductionArtifact a = reduce_bs_no_klc_general(psi, 1, 3);
    const AttractorReport r = attractors(a.network, witness_schedule_general(a, v));
    REQUIRE(r.total() == r.phi(1));
    REQUIRE(constant_on_attractors(r, universal_lambdas(a)));
  }
  const ReductionArtifact a = reduce_bs_no_klc_general(three_clause_formula(), 3, 3);
  CHECK(witness_schedule_general(a, 0).block_count() == 3);
  CHECK(witness_schedule_general(a, 0b111).block_count() == 3);
  CHECK(witness_schedule_general(a, 0b101).block_count() == 4);
}

TEST_CASE("merged general schedule is not a witness") {
  // lambda_1 must be 0: psi = (!l1 | l2 | l2) & (!l1 | !l2 | !l2).
  const Cnf3Formula psi(2, {{neg(0), pos(1), pos(1)}, {neg(0), neg(1), neg(1)}});
  REQUIRE(exists_forall_oracle(psi, 1) == Assignment{0});
  const ReductionArtifact a = reduce_bs_no_klc_general(psi, 1, 3);
  CHECK(attractors(a.network, witness_schedule_general(a, 0)).phi(3) == 0);
  CHECK(attractors(a.network, witness_schedule_general_merged(a, 0)).phi(3) >= 1);
}

TEST_CASE("clock under the parallel code") {
  // Unsatisfiable formula keeps psi, and so stop, at 0.
  const Cnf3Formula psi(1, {{pos(0), pos(0), pos(0)}, {neg(0), neg(0), neg(0)}});
  const ReductionArtifact a = reduce_bs_no_klc_general(psi, 1, 3);
  const std::size_t n = a.network.size();
  const Word seed = Word{1} << a.component(Role::Kind::clock_indexed, 0);
  const Orbit o = orbit(a.network, UpdateSchedule::parallel(n), Configuration(n, seed));
  CHECK(o.period == 3);
  for (const auto& x : o.cycle) CHECK_FALSE(x[a.component(Role::Kind::clock_indexed, 3)]);
  CHECK(verify_clock(3).passed());
}

TEST_CASE("positional rule is total and matches the clock projection") {
  const ReductionArtifact a = reduce_bs_no_klc_general(Cnf3Formula(1, {{pos(0), neg(0), pos(0)}}), 1, 3);
  std::mt19937_64 rng(67);
  for (int t = 0; t < 200; ++t) {
    const UpdateSchedule w = sample_schedule(a.network.size(), rng);
    const bool same = w.block_of(a.component(Role::Kind::lambda_prime, 1)) ==
                      w.block_of(a.component(Role::Kind::clock_indexed, 0));
    if (same) REQUIRE(lambda_value_from_positions(a, w, 0));
    REQUIRE(clock_projection(a, w).size() == 4);
  }
  CHECK(verify_positional_rule().passed());
}

TEST_CASE("reduction output round trips through the text format") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Cnf3Formula psi = random_formula(rng, n, rng() % 4);
    const std::size_t s = 1 + rng() % n;
    for (const auto& a : {reduce_klc(psi, 1 + rng() % 4), reduce_bs_no_klc_even(psi, s, 4),
                          reduce_bs_no_klc_2(psi, s), reduce_bs_no_klc_general(psi, s, 3)}) {
      const std::string text = serialize_bn(a.network);
      const BooleanNetwork back = parse_bn(text);
      REQUIRE(serialize_bn(back) == text);
      REQUIRE(back.names() == a.network.names());
      for (int probe = 0; probe < 64; ++probe) {
        const auto x = oracle::bits_of(rng() & low_mask(back.size()), back.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
          REQUIRE(oracle::eval(back.local(i), x) == oracle::eval(a.network.local(i), x));
        }
      }
    }
  }
}

TEST_CASE("universal variables are frozen in every attractor") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 10; ++t) {
    const Cnf3Formula psi = random_formula(rng, 3, 1 + rng() % 2);
    const ReductionArtifact e = reduce_bs_no_klc_even(psi, 1, 4);
    const ReductionArtifact two = reduce_bs_no_klc_2(psi, 1);
    for (int d = 0; d < 10; ++d) {
      REQUIRE(constant_on_attractors(attractors(e.network, sample_schedule(e.network.size(), rng)),
                                     universal_lambdas(e)));
      REQUIRE(constant_on_attractors(attractors(two.network, sample_schedule(two.network.size(), rng)),
                                     universal_lambdas(two)));
    }
  }
}
