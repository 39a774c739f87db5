#include "bsnet/reductions.hpp"

#include <map>
#include <tuple>

#include "bsnet/error.hpp"

namespace bsnet {

std::string role_kind_name(Role::Kind kind) {
  switch (kind) {
    case Role::Kind::lambda:
      return "lambda";
    case Role::Kind::lambda_prime:
      return "lambda'";
    case Role::Kind::lambda_second:
      return "lambda''";
    case Role::Kind::clause:
      return "C";
    case Role::Kind::psi:
      return "psi";
    case Role::Kind::psi_indexed:
      return "psi_i";
    case Role::Kind::clock:
      return "Omega";
    case Role::Kind::clock_indexed:
      return "Omega_i";
    case Role::Kind::schedule_bit:
      return "omega_i";
    case Role::Kind::stop:
      return "stop";
  }
  return "?";
}

std::string role_name(const Role& r) {
  const std::string i = std::to_string(r.index);
  switch (r.kind) {
    case Role::Kind::lambda:
      return "lambda" + i;
    case Role::Kind::lambda_prime:
      return "lambda" + i + "'";
    case Role::Kind::lambda_second:
      return "lambda" + i + "''";
    case Role::Kind::clause:
      return "C" + i;
    case Role::Kind::psi:
      return "psi";
    case Role::Kind::psi_indexed:
      return "psi" + i;
    case Role::Kind::clock:
      return "Omega";
    case Role::Kind::clock_indexed:
      return "Omega" + i;
    case Role::Kind::schedule_bit:
      return "omega" + i;
    case Role::Kind::stop:
      return "stop";
  }
  return "?";
}

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::klc:
      return "klc";
    case Construction::bs_no_klc_even:
      return "even";
    case Construction::bs_no_klc_2:
      return "two";
    case Construction::bs_no_klc_general:
      return "general";
  }
  return "?";
}

std::size_t ReductionArtifact::component(Role::Kind kind, std::size_t index) const {
  for (std::size_t c = 0; c < roles.size(); ++c) {
    if (roles[c].kind == kind && roles[c].index == index) return c;
  }
  throw ConstructionError("no component with role " + role_name({kind, index}));
}

std::vector<std::size_t> ReductionArtifact::components(Role::Kind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < roles.size(); ++c) {
    if (roles[c].kind == kind) out.push_back(c);
  }
  return out;
}

std::size_t klc_size(std::size_t n, std::size_t m, std::size_t k) { return n + m + k; }
std::size_t even_size(std::size_t n, std::size_t m, std::size_t s, std::size_t k) { return 2 * s + n + m + k + 2; }
std::size_t two_size(std::size_t n, std::size_t m, std::size_t s) { return 2 * s + n + m + 2; }
std::size_t general_size(std::size_t n, std::size_t m, std::size_t s, std::size_t k) {
  return s + n + m + k + omega_width(k) + 3;
}

namespace {

// Collects components in order; local functions are filled in afterwards.
class Layout {
 public:
  std::size_t add(Role r) {
    roles_.push_back(r);
    return roles_.size() - 1;
  }
  Expr var(Role::Kind kind, std::size_t index = 0) const { return Expr::variable(find(kind, index)); }
  std::size_t find(Role::Kind kind, std::size_t index = 0) const {
    for (std::size_t c = 0; c < roles_.size(); ++c) {
      if (roles_[c].kind == kind && roles_[c].index == index) return c;
    }
    throw ConstructionError("internal: missing role " + role_name({kind, index}));
  }
  std::size_t size() const { return roles_.size(); }

  ReductionArtifact finish(std::vector<Expr> locals, Construction c, std::size_t k, std::size_t s,
                           const Cnf3Formula& psi) const {
    std::vector<std::string> names;
    for (const Role& r : roles_) names.push_back(role_name(r));
    ReductionArtifact a;
    a.network = BooleanNetwork(std::move(names), std::move(locals));
    a.roles = roles_;
    a.construction = c;
    a.k = k;
    a.s = s;
    a.source = psi;
    return a;
  }

 private:
  std::vector<Role> roles_;
};

void require_split(const Cnf3Formula& psi, std::size_t s) {
  if (s < 1 || s > psi.variable_count()) {
    throw ConstructionError("existential prefix s must satisfy 1 <= s <= n (s = " + std::to_string(s) +
                            ", n = " + std::to_string(psi.variable_count()) + ")");
  }
}

void require_size(std::size_t size) {
  if (size > kMaxComponents) {
    throw ConstructionError("constructed network would have " + std::to_string(size) + " components (limit 64)");
  }
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

Expr clause_conjunction(const Layout& l, std::size_t m) {
  std::vector<Expr> cs;
  for (std::size_t j = 1; j <= m; ++j) cs.push_back(l.var(Role::Kind::clause, j));
  return Expr::conjunction(std::move(cs));
}

// Shared part of the even and k = 2 constructions: lambda, lambda',
// lambda'', C.
void add_split_variables(Layout& l, const Cnf3Formula& psi, std::size_t s) {
  const std::size_t n = psi.variable_count();
  for (std::size_t i = 1; i <= n; ++i) l.add({Role::Kind::lambda, i});
  for (std::size_t i = 1; i <= s; ++i) l.add({Role::Kind::lambda_prime, i});
  for (std::size_t i = 1; i <= s; ++i) l.add({Role::Kind::lambda_second, i});
  for (std::size_t j = 1; j <= psi.clause_count(); ++j) l.add({Role::Kind::clause, j});
}

void split_variable_locals(const Layout& l, const Cnf3Formula& psi, std::size_t s, const Expr& clock,
                           std::vector<Expr>& locals) {
  for (std::size_t i = 1; i <= psi.variable_count(); ++i) {
    locals[l.find(Role::Kind::lambda, i)] =
        i <= s ? (l.var(Role::Kind::lambda_prime, i) ^ l.var(Role::Kind::lambda_second, i))
               : l.var(Role::Kind::lambda, i);
  }
  for (std::size_t i = 1; i <= s; ++i) {
    locals[l.find(Role::Kind::lambda_prime, i)] = clock;
    locals[l.find(Role::Kind::lambda_second, i)] = clock;
  }
  const auto vars = identity_map(psi.variable_count());
  for (std::size_t j = 1; j <= psi.clause_count(); ++j) {
    locals[l.find(Role::Kind::clause, j)] = clause_expr(psi.clauses()[j - 1], vars);
  }
}

// Builds a decision diagram over the code bits (most significant first) with
// hash-consed nodes, so equal sub-functions share one node and collapse.
class CodeTree {
 public:
  explicit CodeTree(std::vector<Expr> bits) : bits_(std::move(bits)) {}

  template <typename Leaf>
  Expr build(Leaf&& leaf) {
    memo_.clear();
    return node(0, 0, leaf);
  }

 private:
  template <typename Leaf>
  Expr node(std::size_t depth, Word prefix, Leaf& leaf) {
    if (depth == bits_.size()) return leaf(prefix);
    Expr lo = node(depth + 1, prefix << 1, leaf);
    Expr hi = node(depth + 1, (prefix << 1) | 1u, leaf);
    return combine(bits_[depth], hi, lo);
  }

  Expr combine(const Expr& b, const Expr& hi, const Expr& lo) {
    if (hi.same_leaf(lo)) return hi;
    const bool hc = hi.op() == Expr::Op::constant;
    const bool lc = lo.op() == Expr::Op::constant;
    auto key = std::make_tuple(b.identity(), key_of(hi), key_of(lo));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Expr out;
    if (hc && lc) {
      out = hi.value() ? b : !b;
    } else if (hc) {
      out = hi.value() ? (b | lo) : ((!b) & lo);
    } else if (lc) {
      out = lo.value() ? ((!b) | hi) : (b & hi);
    } else {
      out = if_then_else(b, hi, lo);
    }
    memo_.emplace(key, out);
    return out;
  }

  // Leaves are compared structurally, composite nodes by identity.
  static std::pair<int, std::uintptr_t> key_of(const Expr& e) {
    if (e.op() == Expr::Op::constant) return {0, e.value()};
    if (e.op() == Expr::Op::variable) return {1, e.index()};
    return {2, reinterpret_cast<std::uintptr_t>(e.identity())};
  }

  std::vector<Expr> bits_;
  std::map<std::tuple<const void*, std::pair<int, std::uintptr_t>, std::pair<int, std::uintptr_t>>, Expr> memo_;
};

}  // namespace

ReductionArtifact reduce_klc(const Cnf3Formula& psi, std::size_t k) {
  if (k == 0) throw ConstructionError("cycle length k must be at least 1");
  const std::size_t n = psi.variable_count();
  const std::size_t m = psi.clause_count();
  require_size(klc_size(n, m, k));
  Layout l;
  for (std::size_t i = 1; i <= n; ++i) l.add({Role::Kind::lambda, i});
  for (std::size_t j = 1; j <= m; ++j) l.add({Role::Kind::clause, j});
  for (std::size_t i = 1; i <= k; ++i) l.add({Role::Kind::psi_indexed, i});

  std::vector<Expr> locals(l.size());
  for (std::size_t i = 1; i <= n; ++i) locals[l.find(Role::Kind::lambda, i)] = l.var(Role::Kind::lambda, i);
  const auto vars = identity_map(n);
  for (std::size_t j = 1; j <= m; ++j) locals[l.find(Role::Kind::clause, j)] = clause_expr(psi.clauses()[j - 1], vars);
  const Expr psi1 = l.var(Role::Kind::psi_indexed, 1);
  if (k == 1) {
    locals[l.find(Role::Kind::psi_indexed, 1)] = (!psi1) | clause_conjunction(l, m);
  } else {
    locals[l.find(Role::Kind::psi_indexed, 1)] =
        Expr::conjunction({!psi1, l.var(Role::Kind::psi_indexed, k), clause_conjunction(l, m)});
    for (std::size_t i = 2; i <= k; ++i) {
      locals[l.find(Role::Kind::psi_indexed, i)] =
          (!l.var(Role::Kind::psi_indexed, i)) & l.var(Role::Kind::psi_indexed, i - 1);
    }
  }
  return l.finish(std::move(locals), Construction::klc, k, psi.exists(), psi);
}

Configuration klc_witness_configuration(const ReductionArtifact& a, Assignment v) {
  if (a.construction != Construction::klc) throw ConstructionError("artifact is not a k-LC construction");
  const std::size_t n = a.source.variable_count();
  Word x = v & low_mask(n);
  for (std::size_t c : a.components(Role::Kind::clause)) x |= Word{1} << c;
  x |= Word{1} << a.component(Role::Kind::psi_indexed, 1);
  return Configuration(a.network.size(), x);
}

ReductionArtifact reduce_bs_no_klc_even(const Cnf3Formula& psi, std::size_t s, std::size_t k) {
  if (k <= 2 || k % 2 != 0) throw ConstructionError("this construction needs an even k > 2");
  require_split(psi, s);
  const std::size_t n = psi.variable_count();
  const std::size_t m = psi.clause_count();
  require_size(even_size(n, m, s, k));
  Layout l;
  add_split_variables(l, psi, s);
  l.add({Role::Kind::psi, 0});
  for (std::size_t i = 0; i < k; ++i) l.add({Role::Kind::psi_indexed, i});
  l.add({Role::Kind::clock, 0});

  std::vector<Expr> locals(l.size());
  const Expr omega = l.var(Role::Kind::clock);
  const Expr sat = l.var(Role::Kind::psi);
  locals[l.find(Role::Kind::clock)] = !omega;
  split_variable_locals(l, psi, s, omega, locals);
  locals[l.find(Role::Kind::psi)] = clause_conjunction(l, m);
  for (std::size_t i = 0; i < k; ++i) {
    const Expr self = l.var(Role::Kind::psi_indexed, i);
    const Expr prev = l.var(Role::Kind::psi_indexed, (i + k - 1) % k);
    const Expr hold = i % 2 == 0 ? (sat | !omega) : (sat | omega);
    locals[l.find(Role::Kind::psi_indexed, i)] = if_then_else(hold, self, prev);
  }
  return l.finish(std::move(locals), Construction::bs_no_klc_even, k, s, psi.with_exists(s));
}

ReductionArtifact reduce_bs_no_klc_2(const Cnf3Formula& psi, std::size_t s) {
  require_split(psi, s);
  const std::size_t n = psi.variable_count();
  const std::size_t m = psi.clause_count();
  require_size(two_size(n, m, s));
  Layout l;
  add_split_variables(l, psi, s);
  l.add({Role::Kind::psi, 0});
  l.add({Role::Kind::clock, 0});

  std::vector<Expr> locals(l.size());
  const Expr omega = l.var(Role::Kind::clock);
  const Expr sat = l.var(Role::Kind::psi);
  locals[l.find(Role::Kind::clock)] = (!omega) & (!sat);
  split_variable_locals(l, psi, s, omega, locals);
  locals[l.find(Role::Kind::psi)] = clause_conjunction(l, m) | sat;
  return l.finish(std::move(locals), Construction::bs_no_klc_2, 2, s, psi.with_exists(s));
}

std::optional<std::size_t> clock_source(const UpdateSchedule& c, std::size_t i) {
  const std::size_t k = c.size() - 1;
  if (c.is_parallel()) {
    if (i == k) return std::nullopt;
    return (i + k - 1) % k;
  }
  const auto j = j_permutation(c);
  std::size_t p = 0;
  while (j[p] != i) ++p;
  return j[(p + 1) % (k + 1)];
}

ReductionArtifact reduce_bs_no_klc_general(const Cnf3Formula& psi, std::size_t s, std::size_t k) {
  if (k <= 2) throw ConstructionError("this construction needs k > 2");
  require_split(psi, s);
  const std::size_t n = psi.variable_count();
  const std::size_t m = psi.clause_count();
  require_size(general_size(n, m, s, k));
  const std::size_t width = omega_width(k);
  if (width > 20) throw ConstructionError("schedule code too wide for k = " + std::to_string(k));
  Layout l;
  for (std::size_t i = 1; i <= n; ++i) l.add({Role::Kind::lambda, i});
  for (std::size_t i = 1; i <= s; ++i) l.add({Role::Kind::lambda_prime, i});
  for (std::size_t j = 1; j <= m; ++j) l.add({Role::Kind::clause, j});
  l.add({Role::Kind::psi, 0});
  for (std::size_t i = 0; i <= k; ++i) l.add({Role::Kind::clock_indexed, i});
  for (std::size_t i = 1; i <= width; ++i) l.add({Role::Kind::schedule_bit, i});
  l.add({Role::Kind::stop, 0});

  std::vector<Expr> locals(l.size());
  const Expr stop = l.var(Role::Kind::stop);
  const Expr sat = l.var(Role::Kind::psi);
  const Expr omega0 = l.var(Role::Kind::clock_indexed, 0);

  std::vector<Expr> bits;
  for (std::size_t i = 1; i <= width; ++i) {
    bits.push_back(l.var(Role::Kind::schedule_bit, i));
    locals[l.find(Role::Kind::schedule_bit, i)] = bits.back();
  }

  // Decode every valid code once: sources[code][i] is the clock component
  // Omega_i copies, or -1 for constant 0.
  const auto valid = static_cast<Word>(ordered_bell(k + 1));
  std::vector<std::vector<long>> sources(valid, std::vector<long>(k + 1, -1));
  for (Word code = 0; code < valid; ++code) {
    const UpdateSchedule c = unrank(BigInt(code), k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      if (auto src = clock_source(c, i)) sources[code][i] = static_cast<long>(*src);
    }
  }
  CodeTree tree(bits);
  const Expr zero = Expr::constant(false);
  const Expr one = Expr::constant(true);
  for (std::size_t i = 0; i <= k; ++i) {
    const Expr next = tree.build([&](Word code) {
      if (code >= valid || sources[code][i] < 0) return zero;
      return l.var(Role::Kind::clock_indexed, static_cast<std::size_t>(sources[code][i]));
    });
    locals[l.find(Role::Kind::clock_indexed, i)] = (!stop) & next;
  }
  const Expr error = tree.build([&](Word code) { return code >= valid ? one : zero; });
  locals[l.find(Role::Kind::stop)] = Expr::disjunction({stop, sat, error});

  for (std::size_t i = 1; i <= s; ++i) {
    const Expr lp = l.var(Role::Kind::lambda_prime, i);
    const Expr li = l.var(Role::Kind::lambda, i);
    locals[l.find(Role::Kind::lambda_prime, i)] = omega0;
    locals[l.find(Role::Kind::lambda, i)] = (omega0 & (omega0 ^ lp)) | ((!omega0) & li);
  }
  for (std::size_t i = s + 1; i <= n; ++i) locals[l.find(Role::Kind::lambda, i)] = l.var(Role::Kind::lambda, i);
  const auto vars = identity_map(n);
  for (std::size_t j = 1; j <= m; ++j) locals[l.find(Role::Kind::clause, j)] = clause_expr(psi.clauses()[j - 1], vars);
  locals[l.find(Role::Kind::psi)] = clause_conjunction(l, m);
  return l.finish(std::move(locals), Construction::bs_no_klc_general, k, s, psi.with_exists(s));
}

namespace {

UpdateSchedule from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> blocks) {
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return UpdateSchedule(n, std::move(blocks));
}

// Splits lambda' components by v into (T', F').
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_by_valuation(const ReductionArtifact& a,
                                                                                 Assignment v) {
  std::vector<std::size_t> t;
  std::vector<std::size_t> f;
  for (std::size_t i = 1; i <= a.s; ++i) {
    (((v >> (i - 1)) & 1u) ? t : f).push_back(a.component(Role::Kind::lambda_prime, i));
  }
  return {t, f};
}

std::vector<std::size_t> remaining(const ReductionArtifact& a, const std::vector<std::vector<std::size_t>>& used) {
  std::vector<bool> taken(a.network.size(), false);
  for (const auto& b : used) {
    for (std::size_t c : b) taken[c] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < taken.size(); ++c) {
    if (!taken[c]) rest.push_back(c);
  }
  return rest;
}

}  // namespace

UpdateSchedule witness_schedule_even(const ReductionArtifact& a, Assignment v) {
  if (a.construction != Construction::bs_no_klc_even && a.construction != Construction::bs_no_klc_2) {
    throw ConstructionError("witness_schedule_even needs a single-clock construction");
  }
  auto [t, f] = split_by_valuation(a, v);
  const auto seconds = a.components(Role::Kind::lambda_second);
  f.insert(f.end(), seconds.begin(), seconds.end());
  std::vector<std::vector<std::size_t>> blocks{t, {a.component(Role::Kind::clock)}, f};
  blocks.push_back(remaining(a, blocks));
  return from_blocks(a.network.size(), std::move(blocks));
}

UpdateSchedule witness_schedule_general(const ReductionArtifact& a, Assignment v) {
  if (a.construction != Construction::bs_no_klc_general) {
    throw ConstructionError("witness_schedule_general needs the multi-clock construction");
  }
  auto [t, f] = split_by_valuation(a, v);
  std::vector<std::vector<std::size_t>> blocks{t, a.components(Role::Kind::clock_indexed), f};
  blocks.push_back(remaining(a, blocks));
  return from_blocks(a.network.size(), std::move(blocks));
}

UpdateSchedule witness_schedule_general_merged(const ReductionArtifact& a, Assignment v) {
  if (a.construction != Construction::bs_no_klc_general) {
    throw ConstructionError("witness_schedule_general needs the multi-clock construction");
  }
  auto [t, f] = split_by_valuation(a, v);
  std::vector<std::vector<std::size_t>> blocks{t, a.components(Role::Kind::clock_indexed)};
  blocks.push_back(remaining(a, blocks));
  return from_blocks(a.network.size(), std::move(blocks));
}

bool lambda_value_from_positions(const ReductionArtifact& a, const UpdateSchedule& w, std::size_t i) {
  if (a.construction != Construction::bs_no_klc_general) {
    throw ConstructionError("positional rule applies to the multi-clock construction");
  }
  if (i >= a.s) throw ConstructionError("variable is not existential");
  const std::size_t lp = a.component(Role::Kind::lambda_prime, i + 1);
  const std::size_t li = a.component(Role::Kind::lambda, i + 1);
  const std::size_t o = a.component(Role::Kind::clock_indexed, 0);
  auto before = [&](std::size_t x, std::size_t y) { return precedes(w, x, y) == Precedence::strictly_before; };
  auto not_after = [&](std::size_t x, std::size_t y) { return precedes(w, x, y) != Precedence::strictly_after; };
  return precedes(w, lp, o) == Precedence::same_block || (before(o, li) && not_after(li, lp)) ||
         (not_after(li, lp) && before(lp, o)) || (before(lp, o) && before(o, li));
}

UpdateSchedule clock_projection(const ReductionArtifact& a, const UpdateSchedule& w) {
  const auto clock = a.components(Role::Kind::clock_indexed);
  if (clock.empty()) throw ConstructionError("artifact has no indexed clock");
  std::vector<std::vector<std::size_t>> blocks(w.block_count());
  for (std::size_t i = 0; i < clock.size(); ++i) blocks[w.block_of(clock[i])].push_back(i);
  return from_blocks(clock.size(), std::move(blocks));
}

Word with_schedule_code_bits(const ReductionArtifact& a, Word x, const std::vector<bool>& bits) {
  const auto omega = a.components(Role::Kind::schedule_bit);
  if (bits.size() != omega.size()) throw EncodingError("schedule code has the wrong width");
  for (std::size_t i = 0; i < omega.size(); ++i) {
    x = bits[i] ? (x | (Word{1} << omega[i])) : (x & ~(Word{1} << omega[i]));
  }
  return x;
}

Word with_schedule_code(const ReductionArtifact& a, Word x, const UpdateSchedule& clock_schedule) {
  return with_schedule_code_bits(a, x, encode_omega(clock_schedule));
}

}  // namespace bsnet
