#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsnet/expr.hpp"

namespace bsnet {

/// Variable index is 0-based: variable 0 is lambda_1.
struct Literal {
  std::size_t variable = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// Assignment of variables, bit i holding the value of variable i.
using Assignment = Word;

/// CNF with exactly three literals per clause (repetition allowed) and an
/// existential prefix: variables 0..s-1 are existential, the rest universal.
class Cnf3Formula {
 public:
  Cnf3Formula() = default;
  /// Throws StructureError when a literal is out of range or s > n.
  Cnf3Formula(std::size_t variables, std::vector<Clause> clauses, std::optional<std::size_t> exists = std::nullopt);

  std::size_t variable_count() const noexcept { return n_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  /// Size s of the existential prefix (n when unused).
  std::size_t exists() const noexcept { return s_; }
  Cnf3Formula with_exists(std::size_t s) const { return Cnf3Formula(n_, clauses_, s); }

  friend bool operator==(const Cnf3Formula&, const Cnf3Formula&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Clause> clauses_;
  std::size_t s_ = 0;
};

/// Clause list of arbitrary width, produced by substitution. An empty clause
/// is unsatisfiable; an empty clause list is true.
struct Cnf {
  std::size_t variable_count = 0;
  std::vector<std::vector<Literal>> clauses;
};

using PartialAssignment = std::map<std::size_t, bool>;

/// Strict mode rejects clauses without exactly three literals; lenient mode
/// pads shorter nonempty clauses by repeating their last literal.
Cnf3Formula parse_dimacs(std::string_view text, bool lenient = false);
std::string to_dimacs(const Cnf3Formula& psi);

bool eval_formula(const Cnf3Formula& psi, Assignment a);
bool eval_formula(const Cnf& psi, Assignment a);
/// Throws StructureError unless every variable is assigned.
bool eval_formula(const Cnf3Formula& psi, const PartialAssignment& a);

/// psi[v]: satisfied clauses are dropped, falsified literals removed.
Cnf substitute(const Cnf3Formula& psi, const PartialAssignment& v);

inline constexpr std::size_t kSatOracleCap = 24;
inline constexpr std::size_t kExistsForallOracleCap = 20;

/// Lexicographically first satisfying assignment (lambda_1 most significant),
/// by exhausting all 2^n assignments. Throws SizeError above the cap.
std::optional<Assignment> sat_oracle(const Cnf3Formula& psi);

/// Lexicographically first v over lambda_1..lambda_s such that every
/// extension satisfies psi, or nullopt. Throws SizeError above the cap.
std::optional<Assignment> exists_forall_oracle(const Cnf3Formula& psi, std::size_t s);

/// Clause as a disjunction over component indices `var_component[i]`.
Expr clause_expr(const Clause& c, const std::vector<std::size_t>& var_component);

/// Human-readable form, e.g. (l1 | l2 | !l3) & (...).
std::string to_string(const Cnf3Formula& psi);

}  // namespace bsnet
