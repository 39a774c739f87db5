#include "bsnet/verify.hpp"

#include <chrono>
#include <memory>
#include <set>

#include "bsnet/error.hpp"
#include "bsnet/network_io.hpp"

namespace bsnet {

void SuiteResult::fail(std::string what) {
  ++failure_count;
  if (failures.size() < kMaxReported) failures.push_back(std::move(what));
}

namespace {

class Timer {
 public:
  explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word set_bit(Word x, std::size_t i, bool v) { return v ? (x | (Word{1} << i)) : (x & ~(Word{1} << i)); }
bool get_bit(Word x, std::size_t i) { return ((x >> i) & 1u) != 0; }

std::string labels(const UpdateSchedule& w) {
  std::string out;
  for (std::size_t b : w.block_indices()) out += std::to_string(b);
  return out;
}

std::string describe(const Cnf3Formula& psi) {
  return "psi = " + to_string(psi) + " (n=" + std::to_string(psi.variable_count()) + ")";
}

std::uint64_t suite_seed(std::uint64_t seed, Construction c, std::size_t k) {
  return seed * 1000003u + static_cast<std::uint64_t>(c) * 101u + k;
}

struct Shape {
  std::size_t n;
  std::size_t s;
  std::size_t m;
};

// Instance sizes keep the constructed networks within exhaustive reach.
Shape instance_shape(Construction c, std::size_t k, std::mt19937_64& rng) {
  if (c == Construction::bs_no_klc_general && k >= 4) {
    const std::size_t n = uniform(rng, 2, 3);
    const std::size_t s = uniform(rng, 1, std::min<std::size_t>(2, n));
    return {n, s, uniform(rng, 1, 7 - n - s)};
  }
  const std::size_t n = uniform(rng, 2, 4);
  return {n, uniform(rng, 1, 2), uniform(rng, 1, 4)};
}

struct Instance {
  Shape shape;
  Cnf3Formula psi;
};

// Redraws the shape when it admits no instance with the requested answer
// (a single clause is never a negative instance, for example).
std::optional<Instance> draw_instance(Construction c, std::size_t k, std::mt19937_64& rng, bool positive) {
  for (std::size_t t = 0; t < 200; ++t) {
    const Shape sh = instance_shape(c, k, rng);
    if (auto psi = random_instance(rng, sh.n, sh.m, sh.s, positive, 500)) return Instance{sh, *psi};
  }
  return std::nullopt;
}

ReductionArtifact build(Construction c, const Cnf3Formula& psi, std::size_t s, std::size_t k) {
  switch (c) {
    case Construction::klc:
      return reduce_klc(psi, k);
    case Construction::bs_no_klc_even:
      return reduce_bs_no_klc_even(psi, s, k);
    case Construction::bs_no_klc_2:
      return reduce_bs_no_klc_2(psi, s);
    case Construction::bs_no_klc_general:
      return reduce_bs_no_klc_general(psi, s, k);
  }
  throw ConstructionError("unknown construction");
}

bool clauses_hold(const ReductionArtifact& a, Word x, Word& with_clauses) {
  bool all = true;
  for (std::size_t j = 1; j <= a.source.clause_count(); ++j) {
    const bool v = eval_formula(Cnf3Formula(a.source.variable_count(), {a.source.clauses()[j - 1]}), x);
    with_clauses = set_bit(with_clauses, a.component(Role::Kind::clause, j), v);
    all = all && v;
  }
  return all;
}

// Copy of the network in which psi (and stop) are constant 0, so the clock
// keeps running while the existential variables settle.
std::shared_ptr<const CompiledNetwork> released_network(const ReductionArtifact& a) {
  std::vector<Expr> locals = a.network.locals();
  locals[a.component(Role::Kind::psi)] = Expr::constant(false);
  if (a.construction == Construction::bs_no_klc_general) locals[a.component(Role::Kind::stop)] = Expr::constant(false);
  return std::make_shared<const CompiledNetwork>(BooleanNetwork(a.network.names(), std::move(locals)));
}

struct NegativeNets {
  std::shared_ptr<const CompiledNetwork> real;
  std::shared_ptr<const CompiledNetwork> released;
};

std::optional<Configuration> negative_cycle(const ReductionArtifact& a, const NegativeNets& nets,
                                            const UpdateSchedule& w, std::size_t cap, bool* exhaustive = nullptr) {
  const Stepper step(nets.real, w);
  const Stepper settle(nets.released, w);
  const std::size_t k = a.k;
  const std::size_t n = a.source.variable_count();
  const std::size_t s = a.s;
  const bool general = a.construction == Construction::bs_no_klc_general;
  const bool even = a.construction == Construction::bs_no_klc_even;
  const std::size_t sat = a.component(Role::Kind::psi);

  Word base = 0;
  if (general) {
    const UpdateSchedule clock = clock_projection(a, w);
    base = with_schedule_code(a, base, clock);
    const std::size_t token = clock.is_parallel() ? 1 : j_permutation(clock)[k - 1];
    base = set_bit(base, a.component(Role::Kind::clock_indexed, token), true);
  } else if (even) {
    base = set_bit(base, a.component(Role::Kind::clock), true);
  }

  auto try_seed = [&](Word x) -> std::optional<Configuration> {
    const Orbit o = orbit(step, x);
    if (o.period == k && is_in_k_cycle(step, o.cycle.front().bits(), k)) return o.cycle.front();
    return std::nullopt;
  };

  for (Word u = 0; u < (Word{1} << (n - s)); ++u) {
    Word x = base;
    for (std::size_t j = 0; j < n - s; ++j) x = set_bit(x, a.component(Role::Kind::lambda, s + j + 1), get_bit(u, j));
    x = settle.iterate(x, 2 * k + 6);
    Word patched = x;
    patched = set_bit(patched, sat, clauses_hold(a, x & low_mask(n), patched));
    if (!even) {
      if (auto c = try_seed(patched)) return c;
      continue;
    }
    // Pair of 1s at every ring offset, in both clock phases.
    for (Word phase : {patched, settle(patched)}) {
      for (std::size_t first = 0; first < k; ++first) {
        Word y = phase;
        for (std::size_t i = 0; i < k; ++i) {
          y = set_bit(y, a.component(Role::Kind::psi_indexed, i), i == first || i == (first + 1) % k);
        }
        if (auto c = try_seed(y)) return c;
      }
    }
  }
  if (exhaustive) *exhaustive = true;
  if (a.network.size() > cap) return std::nullopt;
  if (auto found = find_attractor(step, CycleLength::exactly(k), cap)) return found->cycle.front();
  return std::nullopt;
}

// Ordered partitions of a triple of components, with all other components
// as one block placed first or last.
std::vector<UpdateSchedule> skeleton_schedules(std::size_t size, const std::array<std::size_t, 3>& triple) {
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < size; ++c) {
    if (c != triple[0] && c != triple[1] && c != triple[2]) rest.push_back(c);
  }
  std::vector<UpdateSchedule> out;
  for (const UpdateSchedule& t : all_schedules(3)) {
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : t.blocks()) {
      std::vector<std::size_t> mapped;
      for (std::size_t e : b) mapped.push_back(triple[e]);
      blocks.push_back(mapped);
    }
    if (rest.empty()) {
      out.emplace_back(size, blocks);
      continue;
    }
    auto first = blocks;
    first.insert(first.begin(), rest);
    out.emplace_back(size, first);
    blocks.push_back(rest);
    out.emplace_back(size, blocks);
  }
  return out;
}

std::vector<UpdateSchedule> structured_schedules(const ReductionArtifact& a) {
  std::vector<UpdateSchedule> out;
  const std::size_t size = a.network.size();
  const bool general = a.construction == Construction::bs_no_klc_general;
  const std::size_t clock =
      general ? a.component(Role::Kind::clock_indexed, 0) : a.component(Role::Kind::clock);
  for (std::size_t i = 1; i <= a.s; ++i) {
    const std::size_t lp = a.component(Role::Kind::lambda_prime, i);
    for (const auto& w : skeleton_schedules(size, {lp, a.component(Role::Kind::lambda, i), clock})) out.push_back(w);
    if (!general) {
      for (const auto& w : skeleton_schedules(size, {lp, a.component(Role::Kind::lambda_second, i), clock})) {
        out.push_back(w);
      }
    }
  }
  for (Word v = 0; v < (Word{1} << a.s); ++v) {
    if (general) {
      out.push_back(witness_schedule_general(a, v));
      out.push_back(witness_schedule_general_merged(a, v));
    } else {
      out.push_back(witness_schedule_even(a, v));
    }
  }
  return out;
}

}  // namespace

Cnf3Formula random_formula(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<Clause> clauses(m);
  for (Clause& c : clauses) {
    for (Literal& l : c) l = {uniform(rng, 0, n - 1), uniform(rng, 0, 1) == 1};
  }
  return Cnf3Formula(n, std::move(clauses));
}

BooleanNetwork random_network(std::mt19937_64& rng, std::size_t n, std::size_t depth) {
  std::function<Expr(std::size_t)> gen = [&](std::size_t d) -> Expr {
    const std::size_t pick = uniform(rng, 0, 9);
    if (d == 0 || pick < 3) {
      if (pick == 0) return Expr::constant(uniform(rng, 0, 1) == 1);
      return Expr::variable(uniform(rng, 0, n - 1));
    }
    if (pick == 3) return !gen(d - 1);
    std::vector<Expr> ops;
    const std::size_t arity = uniform(rng, 2, 3);
    for (std::size_t i = 0; i < arity; ++i) ops.push_back(gen(d - 1));
    if (pick < 6) return Expr::conjunction(std::move(ops));
    if (pick < 9) return Expr::disjunction(std::move(ops));
    return Expr::exclusive_or(std::move(ops));
  };
  std::vector<std::string> names;
  std::vector<Expr> locals;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i + 1));
    locals.push_back(gen(depth));
  }
  return BooleanNetwork(std::move(names), std::move(locals));
}

BooleanNetwork swap_network() { return parse_bn("x1 := x2\nx2 := x1\n"); }
BooleanNetwork rotation_network() { return parse_bn("x1 := x3\nx2 := x1\nx3 := x2\n"); }

Cnf3Formula three_clause_formula() {
  return Cnf3Formula(5, {{Literal{0, false}, Literal{1, false}, Literal{2, true}},
                         {Literal{1, true}, Literal{3, false}, Literal{4, true}},
                         {Literal{0, true}, Literal{3, true}, Literal{4, false}}});
}

std::optional<Cnf3Formula> random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t s,
                                           bool positive, std::size_t attempts) {
  for (std::size_t t = 0; t < attempts; ++t) {
    Cnf3Formula psi = random_formula(rng, n, m).with_exists(s);
    if (exists_forall_oracle(psi, s).has_value() == positive) return psi;
  }
  return std::nullopt;
}

std::optional<Configuration> find_negative_cycle(const ReductionArtifact& a, const UpdateSchedule& w, std::size_t cap) {
  if (a.construction == Construction::klc) throw ConstructionError("no negative search for the k-LC construction");
  return negative_cycle(a, {std::make_shared<const CompiledNetwork>(a.network), released_network(a)}, w, cap);
}

SuiteResult verify_separation() {
  SuiteResult r;
  r.name = "separation";
  Timer timer(r);
  const BooleanNetwork f = swap_network();
  const BooleanNetwork g = rotation_network();
  auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
    ++r.cases;
    r.notes.push_back(what + " = " + std::to_string(got));
    if (got != want) r.fail(what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  expect("phi_2(f, parallel)", phi(f, UpdateSchedule::parallel(2), 2), 1);
  expect("phi_2(f, {x1}>{x2})", phi(f, parse_schedule("{x1}>{x2}", f.names()), 2), 0);
  const UpdateSchedule w = parse_schedule("{x1}>{x2,x3}", g.names());
  const AttractorReport report = attractors(g, w);
  expect("phi_2(f', {x1}>{x2,x3})", report.phi(2), 1);
  ++r.cases;
  const auto cycle = report.configurations_in(2);
  if (cycle != std::vector<Configuration>{Configuration::parse("001"), Configuration::parse("110")}) {
    r.fail("2-cycle of f' under {x1}>{x2,x3} is not {001, 110}");
  }
  expect("phi_2(f', parallel)", phi(g, UpdateSchedule::parallel(3), 2), 0);
  return r;
}

SuiteResult verify_ordered_bell() {
  SuiteResult r;
  r.name = "ordered-bell";
  Timer timer(r);
  const std::uint64_t expected[] = {1, 3, 13, 75, 541, 4683, 47293, 545835};
  for (std::size_t n = 1; n <= 8; ++n) {
    ++r.cases;
    if (ordered_bell(n) != expected[n - 1]) {
      r.fail("B(" + std::to_string(n) + ") = " + ordered_bell(n).str());
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    ++r.cases;
    const auto all = all_schedules(n);
    if (BigInt(all.size()) != ordered_bell(n)) {
      r.fail("enumeration of n = " + std::to_string(n) + " yields " + std::to_string(all.size()));
      continue;
    }
    std::set<std::vector<std::size_t>> distinct;
    for (std::size_t i = 0; i < all.size(); ++i) {
      distinct.insert(all[i].block_indices());
      if (n <= 5 && (rank(all[i]) != i || !(unrank(BigInt(i), n) == all[i]))) {
        r.fail("rank/unrank mismatch at n = " + std::to_string(n) + ", index " + std::to_string(i));
      }
    }
    if (distinct.size() != all.size()) r.fail("duplicate schedules at n = " + std::to_string(n));
  }
  return r;
}

namespace {

void check_klc(SuiteResult& r, const Cnf3Formula& psi, std::size_t k) {
  ++r.cases;
  const auto witness = sat_oracle(psi);
  const ReductionArtifact a = reduce_klc(psi, k);
  const Decision d = solve_klc(a.network, CycleLength::exactly(k));
  const bool yes = d.answer == Answer::yes;
  if (yes != witness.has_value()) {
    r.fail(describe(psi) + ", k=" + std::to_string(k) + ": satisfiable=" + (witness ? "yes" : "no") +
           " but k-cycle=" + to_string(d.answer));
    return;
  }
  if (yes && !verify_existence_certificate(a.network, CycleLength::exactly(k), d)) {
    r.fail(describe(psi) + ", k=" + std::to_string(k) + ": certificate does not re-verify");
  }
  if (witness) {
    const Configuration x = klc_witness_configuration(a, *witness);
    if (!is_in_k_cycle(a.network, UpdateSchedule::parallel(a.network.size()), x, k)) {
      r.fail(describe(psi) + ", k=" + std::to_string(k) + ": witness configuration " + x.to_string() +
             " is not on a k-cycle");
    }
  }
}

}  // namespace

SuiteResult verify_klc_equivalence(const SuiteOptions& o) {
  SuiteResult r;
  r.name = "klc-equivalence";
  Timer timer(r);
  std::vector<Clause> all_clauses;
  for (std::size_t code = 0; code < 216; ++code) {
    Clause c;
    std::size_t rest = code;
    for (Literal& l : c) {
      l = {(rest % 6) / 2, rest % 2 == 1};
      rest /= 6;
    }
    all_clauses.push_back(c);
  }
  std::vector<Cnf3Formula> formulas{Cnf3Formula(3, {})};
  for (const Clause& a : all_clauses) formulas.emplace_back(3, std::vector<Clause>{a});
  for (const Clause& a : all_clauses) {
    for (const Clause& b : all_clauses) formulas.emplace_back(3, std::vector<Clause>{a, b});
  }
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.random_formulas; ++i) {
    const std::size_t n = uniform(rng, 1, 5);
    formulas.push_back(random_formula(rng, n, uniform(rng, 0, 4)));
  }
  for (const Cnf3Formula& psi : formulas) {
    for (std::size_t k = 1; k <= 4; ++k) check_klc(r, psi, k);
  }
  r.notes.push_back(std::to_string(formulas.size()) + " formulas x k in 1..4");
  return r;
}

SuiteResult verify_bs_klc_equivalence() {
  SuiteResult r;
  r.name = "bs-klc-equivalence";
  Timer timer(r);
  std::vector<Cnf3Formula> formulas;
  std::vector<Clause> two_var;
  std::vector<Clause> one_var;
  for (std::size_t code = 0; code < 64; ++code) {
    Clause c;
    Clause d;
    for (std::size_t p = 0; p < 3; ++p) {
      const std::size_t lit = (code >> (2 * p)) & 3u;
      c[p] = {lit / 2, lit % 2 == 1};
    }
    for (std::size_t p = 0; p < 3; ++p) d[p] = {0, ((code >> p) & 1u) == 1};
    two_var.push_back(c);
    if (code < 8) one_var.push_back(d);
  }
  for (const Clause& c : two_var) formulas.emplace_back(2, std::vector<Clause>{c});
  for (const Clause& a : one_var) {
    formulas.emplace_back(1, std::vector<Clause>{a});
    for (const Clause& b : one_var) formulas.emplace_back(1, std::vector<Clause>{a, b});
  }
  SearchOptions opts;
  opts.budget = 1'000'000;
  for (const Cnf3Formula& psi : formulas) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const ReductionArtifact a = reduce_klc(psi, k);
      if (a.network.size() > 6) continue;
      ++r.cases;
      const bool sat = sat_oracle(psi).has_value();
      const Decision d = solve_bs_klc(a.network, CycleLength::exactly(k), opts);
      if (d.mode != SearchMode::exhaustive) r.fail(describe(psi) + ": schedule search was not exhaustive");
      if ((d.answer == Answer::yes) != sat) {
        r.fail(describe(psi) + ", k=" + std::to_string(k) + ": satisfiable=" + (sat ? "yes" : "no") +
               " but some schedule has a k-cycle=" + to_string(d.answer));
      } else if (sat && !verify_existence_certificate(a.network, CycleLength::exactly(k), d)) {
        r.fail(describe(psi) + ", k=" + std::to_string(k) + ": certificate does not re-verify");
      }
    }
  }
  return r;
}

SuiteResult verify_positive(Construction c, std::size_t k, const SuiteOptions& o) {
  SuiteResult r;
  r.name = "positive-" + construction_name(c) + "-k" + std::to_string(k);
  Timer timer(r);
  std::mt19937_64 rng(suite_seed(o.seed, c, k));
  for (std::size_t t = 0; t < o.instances; ++t) {
    auto inst = draw_instance(c, k, rng, true);
    if (!inst) {
      r.fail("no positive instance found");
      continue;
    }
    const Shape sh = inst->shape;
    const auto* psi = &inst->psi;
    ++r.cases;
    const Assignment v = *exists_forall_oracle(*psi, sh.s);
    const ReductionArtifact a = build(c, *psi, sh.s, k);
    const UpdateSchedule w =
        c == Construction::bs_no_klc_general ? witness_schedule_general(a, v) : witness_schedule_even(a, v);
    const Stepper step(a.network, w);
    const std::string where = describe(*psi) + ", s=" + std::to_string(sh.s) + ", W=" +
                              format_schedule(w, a.network.names());
    if (c == Construction::bs_no_klc_even) {
      const AttractorReport report = attractors(step, a.network.size());
      for (const auto& [len, group] : report.by_length()) {
        if (len != 2) r.fail(where + ": attractor of length " + std::to_string(len));
        for (const Attractor& at : group) {
          for (const Configuration& x : at.cycle) {
            if ((x.bits() & low_mask(sh.s)) != v) r.fail(where + ": existential states differ from v in " + x.to_string());
          }
        }
      }
    } else if (auto bad = find_attractor(step, CycleLength::at_least(2), a.network.size())) {
      r.fail(where + ": attractor of length " + std::to_string(bad->length()) + " through " +
             bad->cycle.front().to_string());
    }
  }
  return r;
}

SuiteResult verify_negative(Construction c, std::size_t k, const SuiteOptions& o) {
  SuiteResult r;
  r.name = "negative-" + construction_name(c) + "-k" + std::to_string(k);
  Timer timer(r);
  std::mt19937_64 rng(suite_seed(o.seed, c, k) ^ 0x9e3779b97f4a7c15ull);
  std::size_t fallbacks = 0;
  std::size_t schedules = 0;
  for (std::size_t t = 0; t < o.instances; ++t) {
    auto inst = draw_instance(c, k, rng, false);
    if (!inst) {
      r.fail("no negative instance found");
      continue;
    }
    const Shape sh = inst->shape;
    const auto* psi = &inst->psi;
    ++r.cases;
    const ReductionArtifact a = build(c, *psi, sh.s, k);
    const NegativeNets nets{std::make_shared<const CompiledNetwork>(a.network), released_network(a)};
    std::vector<UpdateSchedule> ws = structured_schedules(a);
    for (std::size_t i = 0; i < o.samples; ++i) ws.push_back(sample_schedule(a.network.size(), rng));
    for (const UpdateSchedule& w : ws) {
      ++schedules;
      bool exhaustive = false;
      auto x = negative_cycle(a, nets, w, a.network.size(), &exhaustive);
      if (exhaustive) ++fallbacks;
      if (!x) {
        r.fail(describe(*psi) + ", s=" + std::to_string(sh.s) + ": no " + std::to_string(k) + "-cycle under " +
               format_schedule(w, a.network.names()));
      }
    }
  }
  r.notes.push_back(std::to_string(schedules) + " schedules checked, " + std::to_string(fallbacks) +
                    " needed exhaustive search");
  return r;
}

SuiteResult verify_clock(std::size_t k) {
  SuiteResult r;
  r.name = "clock-k" + std::to_string(k);
  Timer timer(r);
  // lambda2 is universal and held at 0, so psi stays 0 and stop never fires.
  const Cnf3Formula psi(2, {{Literal{1, false}, Literal{1, false}, Literal{1, false}}});
  const ReductionArtifact a = reduce_bs_no_klc_general(psi, 1, k);
  auto net = std::make_shared<const CompiledNetwork>(a.network);
  const auto clock = a.components(Role::Kind::clock_indexed);
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < a.network.size(); ++c) {
    if (a.roles[c].kind != Role::Kind::clock_indexed) rest.push_back(c);
  }
  const auto count = static_cast<std::size_t>(ordered_bell(k + 1));
  for (std::size_t code = 0; code < count; ++code) {
    const UpdateSchedule cw = unrank(BigInt(code), k + 1);
    // Expected token positions, one row per step, as clock indices.
    std::vector<std::vector<std::size_t>> rows;
    if (cw.is_parallel()) {
      for (std::size_t t = 0; t <= k; ++t) rows.push_back({(1 + t) % k});
    } else {
      const auto j = j_permutation(cw);
      for (std::size_t t = 0; t + 1 < k; ++t) rows.push_back({j[k - 1 - t]});
      rows.push_back({j[0], j[k]});
      rows.push_back({j[k - 1]});
    }
    std::vector<std::vector<std::size_t>> clock_blocks;
    for (const auto& b : cw.blocks()) {
      std::vector<std::size_t> mapped;
      for (std::size_t e : b) mapped.push_back(clock[e]);
      clock_blocks.push_back(mapped);
    }
    for (bool rest_first : {false, true}) {
      ++r.cases;
      auto blocks = clock_blocks;
      if (rest_first) {
        blocks.insert(blocks.begin(), rest);
      } else {
        blocks.push_back(rest);
      }
      const UpdateSchedule w(a.network.size(), blocks);
      const Stepper step(net, w);
      Word x = with_schedule_code(a, 0, cw);
      x = set_bit(x, clock[rows[0][0]], true);
      const std::string where = "code " + std::to_string(code) + " (" + labels(cw) +
                                (rest_first ? "), rest first" : "), rest last");
      for (std::size_t t = 0; t < rows.size(); ++t) {
        Word want = 0;
        for (std::size_t e : rows[t]) want |= Word{1} << e;
        Word got = 0;
        for (std::size_t e = 0; e <= k; ++e) got |= Word{get_bit(x, clock[e])} << e;
        if (got != want) {
          r.fail(where + ": clock row " + std::to_string(t) + " mismatch");
          break;
        }
        x = step(x);
      }
      const Orbit orb = orbit(step, with_schedule_code(a, Word{1} << clock[rows[0][0]], cw));
      if (orb.period != k) r.fail(where + ": period " + std::to_string(orb.period));
      if (cw.is_parallel()) {
        for (const Configuration& y : orb.cycle) {
          if (y[clock[k]]) r.fail(where + ": Omega_k left 0 under the parallel code");
        }
      }
    }
  }
  return r;
}

SuiteResult verify_positional_rule(const SuiteOptions&) {
  SuiteResult r;
  r.name = "positional-rule";
  Timer timer(r);
  const Cnf3Formula psi(2, {{Literal{1, false}, Literal{1, false}, Literal{1, false}}});
  for (std::size_t k : {3u, 4u}) {
    const ReductionArtifact a = reduce_bs_no_klc_general(psi, 1, k);
    auto net = std::make_shared<const CompiledNetwork>(a.network);
    const std::size_t lp = a.component(Role::Kind::lambda_prime, 1);
    const std::size_t li = a.component(Role::Kind::lambda, 1);
    const std::size_t o0 = a.component(Role::Kind::clock_indexed, 0);
    std::vector<UpdateSchedule> ws = skeleton_schedules(a.network.size(), {lp, li, o0});
    // Variants where every clock component shares Omega_0's block.
    for (const UpdateSchedule& t : all_schedules(3)) {
      std::vector<std::vector<std::size_t>> blocks;
      const std::size_t triple[3] = {lp, li, o0};
      for (const auto& b : t.blocks()) {
        std::vector<std::size_t> mapped;
        for (std::size_t e : b) {
          mapped.push_back(triple[e]);
          if (e == 2) {
            for (std::size_t i = 1; i <= k; ++i) mapped.push_back(a.component(Role::Kind::clock_indexed, i));
          }
        }
        blocks.push_back(mapped);
      }
      std::vector<std::size_t> rest;
      std::vector<bool> used(a.network.size(), false);
      for (const auto& b : blocks) {
        for (std::size_t c : b) used[c] = true;
      }
      for (std::size_t c = 0; c < used.size(); ++c) {
        if (!used[c]) rest.push_back(c);
      }
      blocks.push_back(rest);
      ws.emplace_back(a.network.size(), blocks);
    }
    for (const UpdateSchedule& w : ws) {
      for (bool start : {false, true}) {
        ++r.cases;
        const Stepper step(net, w);
        const UpdateSchedule cw = clock_projection(a, w);
        const std::size_t token = cw.is_parallel() ? 1 : j_permutation(cw)[k - 1];
        Word x = with_schedule_code(a, 0, cw);
        x = set_bit(x, a.component(Role::Kind::clock_indexed, token), true);
        x = set_bit(x, li, start);
        x = step.iterate(x, 3 * k + 4);
        const bool predicted = lambda_value_from_positions(a, w, 0);
        bool stable = true;
        for (std::size_t t = 0; t < 2 * k; ++t) {
          stable = stable && get_bit(x, li) == predicted;
          x = step(x);
        }
        if (!stable) {
          r.fail("k=" + std::to_string(k) + ", W=" + format_schedule(w, a.network.names()) +
                 ": simulated lambda1 differs from the positional rule (" + (predicted ? "1" : "0") + ")");
        }
      }
    }
  }
  return r;
}

SuiteResult verify_parallelize(const SuiteOptions& o, std::size_t triples) {
  SuiteResult r;
  r.name = "parallelize";
  Timer timer(r);
  std::mt19937_64 rng(o.seed ^ 0x5bd1e995u);
  for (std::size_t t = 0; t < triples; ++t) {
    ++r.cases;
    const std::size_t n = uniform(rng, 1, 8);
    const BooleanNetwork f = random_network(rng, n);
    const UpdateSchedule w = sample_schedule(n, rng);
    const Configuration x(n, rng());
    const Configuration want = step_schedule(f, w, x);
    const BooleanNetwork p = parallelize(f, w);
    const Configuration got = step_schedule(p, UpdateSchedule::parallel(n), x);
    if (got != want) {
      r.fail("W=" + format_schedule(w, f.names()) + ", x=" + x.to_string() + ": parallelized " + got.to_string() +
             " vs " + want.to_string() + "\n" + serialize_bn(f));
    }
  }
  return r;
}

SuiteResult verify_fixed_point_invariance(const SuiteOptions& o, std::size_t networks) {
  SuiteResult r;
  r.name = "fixed-point-invariance";
  Timer timer(r);
  std::mt19937_64 rng(o.seed ^ 0x27d4eb2fu);
  for (std::size_t t = 0; t < networks; ++t) {
    const std::size_t n = uniform(rng, 1, 5);
    const BooleanNetwork f = random_network(rng, n);
    const auto reference = attractors(f, UpdateSchedule::parallel(n)).configurations_in(1);
    for (const UpdateSchedule& w : all_schedules(n)) {
      ++r.cases;
      if (attractors(f, w).configurations_in(1) != reference) {
        r.fail("fixed points differ under " + format_schedule(w, f.names()) + "\n" + serialize_bn(f));
      }
    }
  }
  return r;
}

SuiteResult verify_structure(const SuiteOptions& o, std::size_t inputs) {
  SuiteResult r;
  r.name = "structure";
  Timer timer(r);
  std::mt19937_64 rng(o.seed ^ 0x68e31da4u);
  auto check = [&](const ReductionArtifact& a, std::size_t want, const std::string& what) {
    ++r.cases;
    if (a.network.size() != want) {
      r.fail(what + ": size " + std::to_string(a.network.size()) + ", expected " + std::to_string(want));
    }
    if (a.roles.size() != a.network.size()) r.fail(what + ": role count differs from size");
    std::set<std::string> names(a.network.names().begin(), a.network.names().end());
    if (names.size() != a.network.size()) r.fail(what + ": duplicate component names");
  };
  for (std::size_t t = 0; t < inputs; ++t) {
    const std::size_t n = uniform(rng, 1, 6);
    const std::size_t m = uniform(rng, 0, 6);
    const Cnf3Formula psi = random_formula(rng, n, m);
    const std::size_t s = uniform(rng, 1, n);
    const std::size_t k1 = uniform(rng, 1, 6);
    check(reduce_klc(psi, k1), klc_size(n, m, k1), "klc " + describe(psi));
    const std::size_t ke = 2 * uniform(rng, 2, 4);
    check(reduce_bs_no_klc_even(psi, s, ke), even_size(n, m, s, ke), "even " + describe(psi));
    check(reduce_bs_no_klc_2(psi, s), two_size(n, m, s), "two " + describe(psi));
    const std::size_t kg = uniform(rng, 3, 4);
    check(reduce_bs_no_klc_general(psi, s, kg), general_size(n, m, s, kg), "general " + describe(psi));
  }
  const ReductionArtifact sample = reduce_bs_no_klc_general(three_clause_formula(), 3, 5);
  ++r.cases;
  const std::size_t bits = sample.components(Role::Kind::schedule_bit).size();
  r.notes.push_back("k=5 three-clause instance: size " + std::to_string(sample.network.size()) + ", " + std::to_string(bits) +
                    " schedule bits");
  if (sample.network.size() != 32 || bits != 13) r.fail("k=5 three-clause instance has the wrong shape");
  return r;
}

}  // namespace bsnet
