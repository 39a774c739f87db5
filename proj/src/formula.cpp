#include "bsnet/formula.hpp"

#include <sstream>

#include "bsnet/error.hpp"

namespace bsnet {

Cnf3Formula::Cnf3Formula(std::size_t variables, std::vector<Clause> clauses, std::optional<std::size_t> exists)
    : n_(variables), clauses_(std::move(clauses)), s_(exists.value_or(variables)) {
  if (n_ > kMaxComponents) throw SizeError("formulas are limited to 64 variables");
  if (s_ > n_) throw StructureError("existential prefix longer than the variable list");
  for (const Clause& c : clauses_) {
    for (const Literal& l : c) {
      if (l.variable >= n_) throw StructureError("literal refers to a variable out of range");
    }
  }
}

namespace {

struct ClauseMask {
  Word positive = 0;
  Word negative = 0;
};

std::vector<ClauseMask> masks(const Cnf3Formula& psi) {
  std::vector<ClauseMask> out;
  out.reserve(psi.clause_count());
  for (const Clause& c : psi.clauses()) {
    ClauseMask m;
    for (const Literal& l : c) (l.negated ? m.negative : m.positive) |= Word{1} << l.variable;
    out.push_back(m);
  }
  return out;
}

bool satisfies(const std::vector<ClauseMask>& clauses, Assignment a) {
  for (const ClauseMask& m : clauses) {
    if (((a & m.positive) | (~a & m.negative)) == 0) return false;
  }
  return true;
}

// Maps the i-th assignment in lexicographic order (variable 0 most
// significant) onto the packed form.
Assignment lex_assignment(Word idx, std::size_t n) {
  Assignment a = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if ((idx >> (n - 1 - v)) & 1u) a |= Word{1} << v;
  }
  return a;
}

}  // namespace

Cnf3Formula parse_dimacs(std::string_view text, bool lenient) {
  std::optional<std::size_t> vars;
  std::size_t declared = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  std::size_t line_no = 0;

  auto finish_clause = [&](std::size_t line) {
    if (current.size() != 3) {
      if (!lenient || current.empty() || current.size() > 3) {
        throw ParseError("clause with " + std::to_string(current.size()) + " literals (exactly 3 required)", line, 1);
      }
      while (current.size() < 3) current.push_back(current.back());
    }
    clauses.push_back({current[0], current[1], current[2]});
    current.clear();
  };

  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    std::istringstream in(line);
    std::string tok;
    if (!(in >> tok)) continue;
    if (tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      long long v = -1;
      long long c = -1;
      if (vars || !(in >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0) {
        throw ParseError("malformed header (expected 'p cnf VARS CLAUSES')", line_no, 1);
      }
      vars = static_cast<std::size_t>(v);
      declared = static_cast<std::size_t>(c);
      continue;
    }
    if (!vars) throw ParseError("clause before the 'p cnf' header", line_no, 1);
    in.clear();
    in.str(line);
    long long lit = 0;
    while (in >> lit) {
      if (lit == 0) {
        finish_clause(line_no);
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > *vars) throw ParseError("variable " + std::to_string(var) + " out of range", line_no, 1);
      current.push_back({var - 1, lit < 0});
    }
    if (!in.eof()) throw ParseError("non-numeric token in clause", line_no, 1);
  }
  if (!vars) throw ParseError("missing 'p cnf' header", line_no == 0 ? 1 : line_no, 1);
  if (!current.empty()) throw ParseError("last clause is not terminated by 0", line_no, 1);
  if (clauses.size() != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(clauses.size()),
                     line_no, 1);
  }
  return Cnf3Formula(*vars, std::move(clauses));
}

std::string to_dimacs(const Cnf3Formula& psi) {
  std::string out = "p cnf " + std::to_string(psi.variable_count()) + " " + std::to_string(psi.clause_count()) + "\n";
  for (const Clause& c : psi.clauses()) {
    for (const Literal& l : c) {
      out += (l.negated ? "-" : "") + std::to_string(l.variable + 1) + " ";
    }
    out += "0\n";
  }
  return out;
}

bool eval_formula(const Cnf3Formula& psi, Assignment a) { return satisfies(masks(psi), a); }

bool eval_formula(const Cnf& psi, Assignment a) {
  for (const auto& clause : psi.clauses) {
    bool sat = false;
    for (const Literal& l : clause) sat = sat || (((a >> l.variable) & 1u) != 0) != l.negated;
    if (!sat) return false;
  }
  return true;
}

bool eval_formula(const Cnf3Formula& psi, const PartialAssignment& a) {
  Assignment packed = 0;
  for (std::size_t v = 0; v < psi.variable_count(); ++v) {
    auto it = a.find(v);
    if (it == a.end()) throw StructureError("variable " + std::to_string(v + 1) + " is unassigned");
    if (it->second) packed |= Word{1} << v;
  }
  return eval_formula(psi, packed);
}

Cnf substitute(const Cnf3Formula& psi, const PartialAssignment& v) {
  Cnf out;
  out.variable_count = psi.variable_count();
  for (const Clause& c : psi.clauses()) {
    std::vector<Literal> rest;
    bool satisfied = false;
    for (const Literal& l : c) {
      auto it = v.find(l.variable);
      if (it == v.end()) {
        rest.push_back(l);
      } else if (it->second != l.negated) {
        satisfied = true;
      }
    }
    if (!satisfied) out.clauses.push_back(std::move(rest));
  }
  return out;
}

std::optional<Assignment> sat_oracle(const Cnf3Formula& psi) {
  const std::size_t n = psi.variable_count();
  if (n > kSatOracleCap) throw SizeError("SAT oracle refused: more than 24 variables");
  const auto clauses = masks(psi);
  for (Word idx = 0; idx < (Word{1} << n); ++idx) {
    const Assignment a = lex_assignment(idx, n);
    if (satisfies(clauses, a)) return a;
  }
  return std::nullopt;
}

std::optional<Assignment> exists_forall_oracle(const Cnf3Formula& psi, std::size_t s) {
  const std::size_t n = psi.variable_count();
  if (n > kExistsForallOracleCap) throw SizeError("exists-forall oracle refused: more than 20 variables");
  if (s > n) throw StructureError("existential prefix longer than the variable list");
  const auto clauses = masks(psi);
  const std::size_t universal = n - s;
  for (Word e = 0; e < (Word{1} << s); ++e) {
    const Assignment v = lex_assignment(e, s);
    bool all = true;
    for (Word u = 0; u < (Word{1} << universal) && all; ++u) all = satisfies(clauses, v | (u << s));
    if (all) return v;
  }
  return std::nullopt;
}

Expr clause_expr(const Clause& c, const std::vector<std::size_t>& var_component) {
  std::vector<Expr> lits;
  for (const Literal& l : c) {
    Expr x = Expr::variable(var_component.at(l.variable));
    lits.push_back(l.negated ? !x : x);
  }
  return Expr::disjunction(std::move(lits));
}

std::string to_string(const Cnf3Formula& psi) {
  if (psi.clause_count() == 0) return "1";
  std::string out;
  for (std::size_t j = 0; j < psi.clause_count(); ++j) {
    if (j > 0) out += " & ";
    out += "(";
    for (std::size_t p = 0; p < 3; ++p) {
      const Literal& l = psi.clauses()[j][p];
      if (p > 0) out += " | ";
      out += (l.negated ? "!l" : "l") + std::to_string(l.variable + 1);
    }
    out += ")";
  }
  return out;
}

}  // namespace bsnet
