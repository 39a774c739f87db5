#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bsnet/reductions.hpp"
#include "bsnet/solvers.hpp"

namespace bsnet {

/// Outcome of one verification suite. `cases` counts checked instances;
/// `failures` lists at most `kMaxReported` counterexample descriptions.
struct SuiteResult {
  static constexpr std::size_t kMaxReported = 10;

  std::string name;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const noexcept { return failure_count == 0 && cases > 0; }
  void fail(std::string what);
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Random instances per construction.
  std::size_t instances = 25;
  /// Uniformly drawn schedules per negative instance.
  std::size_t samples = 500;
  /// Random formulas added to the exhaustive k-LC sweep.
  std::size_t random_formulas = 100;
};

/// Uniform random 3-CNF with n variables and m clauses.
Cnf3Formula random_formula(std::mt19937_64& rng, std::size_t n, std::size_t m);

/// Random network whose locals are expressions of bounded depth.
BooleanNetwork random_network(std::mt19937_64& rng, std::size_t n, std::size_t depth = 3);

/// The two-component swap f(x) = (x2, x1) and the three-component rotation
/// f'(x) = (x3, x1, x2).
BooleanNetwork swap_network();
BooleanNetwork rotation_network();

/// phi_2 values of the swap and rotation networks under the schedules that
/// separate the problems.
SuiteResult verify_separation();

/// B(1..8), schedule enumeration counts and rank/unrank round trips.
SuiteResult verify_ordered_bell();

/// Satisfiability agrees with k-cycles of the k-LC construction under
/// parallel update: every formula over 3 variables with at most 2 clauses,
/// plus random formulas, k in 1..4.
SuiteResult verify_klc_equivalence(const SuiteOptions& o = {});

/// Satisfiability agrees with "some schedule has a k-cycle" on k-LC networks
/// of at most 6 components, all schedules enumerated.
SuiteResult verify_bs_klc_equivalence();

/// Positive exists-forall instances: the witness schedule admits no k-cycle.
/// Checks attractor lengths (2 for even, 1 for the others) by enumeration.
SuiteResult verify_positive(Construction c, std::size_t k, const SuiteOptions& o = {});

/// Negative instances: every sampled or skeleton schedule admits a k-cycle.
SuiteResult verify_negative(Construction c, std::size_t k, const SuiteOptions& o = {});

/// Clock of the general construction: period k for every schedule code,
/// matching both step tables row by row.
SuiteResult verify_clock(std::size_t k);

/// Positional rule for lambda_i against simulation, over all schedules of a
/// one-variable general construction's relevant components.
SuiteResult verify_positional_rule(const SuiteOptions& o = {});

/// Parallel update of parallelize(f, W) equals the block-sequential step.
SuiteResult verify_parallelize(const SuiteOptions& o = {}, std::size_t triples = 500);

/// Fixed points do not depend on the schedule.
SuiteResult verify_fixed_point_invariance(const SuiteOptions& o = {}, std::size_t networks = 100);

/// Size formulas of the constructions and the 13 schedule bits for k = 5.
SuiteResult verify_structure(const SuiteOptions& o = {}, std::size_t inputs = 200);

/// Targeted search for a k-cycle of a negative instance's network under
/// w, falling back to exhaustive search. Returns a configuration on a
/// k-cycle, or nullopt.
std::optional<Configuration> find_negative_cycle(const ReductionArtifact& a, const UpdateSchedule& w,
                                                 std::size_t cap = kDefaultExhaustionCap);

/// Random formula with the requested exists-forall answer for split s;
/// tries up to `attempts` draws.
std::optional<Cnf3Formula> random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t s,
                                           bool positive, std::size_t attempts = 10000);

/// Five-variable, three-clause 3-CNF:
/// (l1 | l2 | !l3) & (!l2 | l4 | !l5) & (!l1 | !l4 | l5).
Cnf3Formula three_clause_formula();

}  // namespace bsnet
