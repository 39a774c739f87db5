#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bsnet/formula.hpp"
#include "bsnet/network.hpp"
#include "bsnet/schedule.hpp"

namespace bsnet {

/// Role of one component in a constructed network.
struct Role {
  enum class Kind {
    lambda,         // lambda_i, index 1..n
    lambda_prime,   // lambda'_i, index 1..s
    lambda_second,  // lambda''_i, index 1..s
    clause,         // C_j, index 1..m
    psi,            // conjunction of the clauses
    psi_indexed,    // ring psi_i (1..k for klc, 0..k-1 for even)
    clock,          // single clock Omega
    clock_indexed,  // Omega_i, index 0..k
    schedule_bit,   // omega_i, index 1..width
    stop,
  };
  Kind kind;
  std::size_t index = 0;

  friend bool operator==(const Role&, const Role&) = default;
};

/// Component name used for a role, e.g. lambda2', psi0, Omega3, omega11.
std::string role_name(const Role& r);
/// Short role family tag, e.g. "lambda'", "C", "Omega_i".
std::string role_kind_name(Role::Kind kind);

enum class Construction { klc, bs_no_klc_even, bs_no_klc_2, bs_no_klc_general };

/// CLI-facing name: klc, even, two, general.
std::string construction_name(Construction c);

struct ReductionArtifact {
  BooleanNetwork network;
  std::vector<Role> roles;  // roles[i] is the role of component i
  Construction construction = Construction::klc;
  std::size_t k = 0;
  std::size_t s = 0;
  Cnf3Formula source;

  /// Component holding the role; throws ConstructionError when absent.
  std::size_t component(Role::Kind kind, std::size_t index = 0) const;
  std::vector<std::size_t> components(Role::Kind kind) const;
};

/// Size formulas of the four constructions.
std::size_t klc_size(std::size_t n, std::size_t m, std::size_t k);
std::size_t even_size(std::size_t n, std::size_t m, std::size_t s, std::size_t k);
std::size_t two_size(std::size_t n, std::size_t m, std::size_t s);
std::size_t general_size(std::size_t n, std::size_t m, std::size_t s, std::size_t k);

/// Network with a k-cycle under parallel update iff psi is satisfiable.
/// Components: lambda_1..n, C_1..m, psi_1..k. Throws ConstructionError if k = 0.
ReductionArtifact reduce_klc(const Cnf3Formula& psi, std::size_t k);

/// Configuration lying on a k-cycle of reduce_klc's network when v satisfies
/// the formula: lambda = v, every C_j = 1, psi_1 = 1, the other psi_i = 0.
Configuration klc_witness_configuration(const ReductionArtifact& a, Assignment v);

/// Single flipping clock Omega, shift ring psi_0..psi_{k-1} frozen when psi
/// holds. Requires k even, k > 2 and 1 <= s <= n.
ReductionArtifact reduce_bs_no_klc_even(const Cnf3Formula& psi, std::size_t s, std::size_t k);

/// Clock Omega stopped by a latching psi. Requires 1 <= s <= n.
ReductionArtifact reduce_bs_no_klc_2(const Cnf3Formula& psi, std::size_t s);

/// Clock of period k on Omega_0..Omega_k that follows the schedule code held
/// on omega_1..omega_w, latched off by stop. Requires k > 2 and 1 <= s <= n.
ReductionArtifact reduce_bs_no_klc_general(const Cnf3Formula& psi, std::size_t s, std::size_t k);

/// For reduce_bs_no_klc_even / _2 artifacts:
/// (T', {Omega}, F' + all lambda'', rest) with T' = {lambda'_i | v_i = 1},
/// F' = {lambda'_i | v_i = 0}. Empty blocks are dropped. Bit i of v is the
/// value of lambda_{i+1}.
UpdateSchedule witness_schedule_even(const ReductionArtifact& a, Assignment v);

/// For reduce_bs_no_klc_general artifacts: (T', clock, F', rest). Empty
/// blocks are dropped.
UpdateSchedule witness_schedule_general(const ReductionArtifact& a, Assignment v);

/// (T', clock, rest) with F' merged into the last block. Under this
/// schedule lambda_i settles to 1 even when v_i = 0, so it is not a witness
/// in general; kept for regression tests.
UpdateSchedule witness_schedule_general_merged(const ReductionArtifact& a, Assignment v);

/// Predicted settled value of lambda_i (0-based variable i < s) from the
/// relative positions of lambda'_i, lambda_i and Omega_0 in w.
bool lambda_value_from_positions(const ReductionArtifact& a, const UpdateSchedule& w, std::size_t i);

/// Restriction of w to the clock components, relabelled so that Omega_i is
/// element i.
UpdateSchedule clock_projection(const ReductionArtifact& a, const UpdateSchedule& w);

/// Component whose state Omega_i copies under the clock schedule code `c`
/// (a schedule over k+1 elements), or nullopt when Omega_i is set to 0.
std::optional<std::size_t> clock_source(const UpdateSchedule& c, std::size_t i);

/// x with the omega components set to the code of `clock_schedule`.
Word with_schedule_code(const ReductionArtifact& a, Word x, const UpdateSchedule& clock_schedule);

/// x with the omega components set to raw code bits (omega_1 first).
Word with_schedule_code_bits(const ReductionArtifact& a, Word x, const std::vector<bool>& bits);

}  // namespace bsnet
