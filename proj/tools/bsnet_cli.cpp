#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "bsnet/digraph.hpp"
#include "bsnet/dynamics.hpp"
#include "bsnet/error.hpp"
#include "bsnet/formula.hpp"
#include "bsnet/json_io.hpp"
#include "bsnet/network_io.hpp"
#include "bsnet/reductions.hpp"
#include "bsnet/solvers.hpp"
#include "bsnet/verify.hpp"

using namespace bsnet;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

struct Args {
  std::string net;
  std::string cnf;
  std::size_t k = 2;
  std::optional<std::size_t> exists;
  std::string schedule = "parallel";
  std::string from;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  std::uint64_t samples = 1000;
  std::size_t threads = 1;
  std::size_t cap = kDefaultExhaustionCap;
  bool json = false;
  bool dot = false;
  bool truth_tables = false;
  bool at_least = false;
  bool at_most = false;
  std::string sidecar;
  std::optional<std::size_t> steps;
  std::optional<std::string> index;
  std::size_t n = 0;
  std::size_t instances = 25;
  std::size_t verify_samples = 500;
  std::size_t bell_n = 0;
  std::string assignment;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

BooleanNetwork load_network(const Args& a) { return parse_bn(slurp(a.net)); }

Cnf3Formula load_formula(const Args& a) {
  if (a.cnf.empty()) throw Error("--cnf is required");
  Cnf3Formula psi = parse_dimacs(slurp(a.cnf));
  return a.exists ? psi.with_exists(*a.exists) : psi;
}

CycleLength length_of(const Args& a) {
  if (a.at_least && a.at_most) throw Error("--at-least and --at-most are exclusive");
  if (a.at_least) return CycleLength::at_least(a.k);
  if (a.at_most) return CycleLength::at_most(a.k);
  return CycleLength::exactly(a.k);
}

int cmd_simulate(const Args& a) {
  const BooleanNetwork f = load_network(a);
  const UpdateSchedule w = parse_schedule(a.schedule, f.names());
  if (a.from.empty()) throw Error("--from is required");
  const Configuration x = Configuration::parse(a.from);
  check_configuration(f, x);
  if (a.steps) {
    const Stepper step(f, w);
    Word y = x.bits();
    nlohmann::json trace = nlohmann::json::array();
    for (std::size_t t = 0; t <= *a.steps; ++t) {
      const Configuration c(f.size(), y);
      if (a.json) {
        trace.push_back(c.to_string());
      } else {
        std::cout << t << ' ' << c.to_string() << '\n';
      }
      y = step(y);
    }
    if (a.json) std::cout << nlohmann::json{{"trajectory", trace}}.dump() << '\n';
    return 0;
  }
  const Orbit o = orbit(f, w, x);
  if (a.json) {
    nlohmann::json cycle = nlohmann::json::array();
    for (const auto& c : o.cycle) cycle.push_back(c.to_string());
    std::cout << nlohmann::json{{"transient", o.transient}, {"period", o.period}, {"cycle", cycle}}.dump() << '\n';
    return 0;
  }
  const Stepper step(f, w);
  Word y = x.bits();
  for (std::size_t t = 0; t < o.transient + o.period; ++t) {
    std::cout << t << ' ' << Configuration(f.size(), y).to_string() << '\n';
    y = step(y);
  }
  std::cout << "transient " << o.transient << " period " << o.period << '\n';
  return 0;
}

int cmd_attractors(const Args& a) {
  const BooleanNetwork f = load_network(a);
  const UpdateSchedule w = parse_schedule(a.schedule, f.names());
  const AttractorReport report = attractors(f, w, a.cap);
  if (a.json) {
    std::cout << report_json(report, f, w).dump() << '\n';
    return 0;
  }
  for (const auto& [len, group] : report.by_length()) {
    for (const Attractor& at : group) {
      std::cout << "length " << len << ':';
      for (const auto& c : at.cycle) std::cout << ' ' << c.to_string();
      std::cout << '\n';
    }
  }
  for (const auto& [len, group] : report.by_length()) std::cout << "phi_" << len << " = " << group.size() << '\n';
  return 0;
}

int cmd_digraph(const Args& a) {
  const BooleanNetwork f = load_network(a);
  if (a.truth_tables) {
    const auto tables = truth_table_export(f, 16, a.cap);
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t j = 0; j < f.size(); ++j) {
      nlohmann::json inputs = nlohmann::json::array();
      for (std::size_t i : tables[j].inputs) inputs.push_back(f.name(i));
      std::string bits;
      for (bool b : tables[j].table) bits += b ? '1' : '0';
      out.push_back({{"component", f.name(j)}, {"inputs", inputs}, {"table", bits}});
    }
    std::cout << out.dump() << '\n';
    return 0;
  }
  const SignedDigraph g = interaction_digraph(f, a.cap);
  if (a.dot) {
    std::cout << to_dot(g, f);
    return 0;
  }
  if (a.json) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const Arc& arc : g.arcs()) {
      arcs.push_back({{"from", f.name(arc.from)}, {"to", f.name(arc.to)}, {"sign", to_string(arc.sign)}});
    }
    std::cout << nlohmann::json{{"components", f.names()}, {"arcs", arcs}}.dump() << '\n';
    return 0;
  }
  for (const Arc& arc : g.arcs()) {
    std::cout << f.name(arc.from) << " -> " << f.name(arc.to) << ' ' << to_string(arc.sign) << '\n';
  }
  return 0;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

int cmd_schedules(const Args& a) {
  std::vector<std::string> names;
  if (!a.net.empty()) {
    names = load_network(a).names();
  } else if (a.n > 0) {
    names = default_names(a.n);
  } else {
    throw Error("give -n or --net");
  }
  const std::size_t n = names.size();
  if (a.index) {
    std::cout << format_schedule(unrank(BigInt(*a.index), n), names) << '\n';
    return 0;
  }
  if (ordered_bell(n) > BigInt(a.budget)) {
    throw SizeError("B(" + std::to_string(n) + ") = " + ordered_bell(n).str() + " schedules exceed --budget");
  }
  ScheduleEnumerator e(n);
  while (auto w = e.next()) std::cout << format_schedule(*w, names) << '\n';
  return 0;
}

ReductionArtifact build_artifact(const std::string& which, const Args& a) {
  const Cnf3Formula psi = load_formula(a);
  const std::size_t s = a.exists.value_or(psi.variable_count());
  if (which == "klc") return reduce_klc(psi, a.k);
  if (which == "even") return reduce_bs_no_klc_even(psi, s, a.k);
  if (which == "two") return reduce_bs_no_klc_2(psi, s);
  return reduce_bs_no_klc_general(psi, s, a.k);
}

int cmd_reduce(const std::string& which, const Args& a) {
  const ReductionArtifact art = build_artifact(which, a);
  const nlohmann::json meta = artifact_json(art);
  if (!a.sidecar.empty()) {
    std::ofstream out(a.sidecar);
    if (!out) throw Error("cannot write '" + a.sidecar + "'");
    out << meta.dump(2) << '\n';
  }
  if (a.json) {
    std::cout << meta.dump() << '\n';
  } else {
    std::cout << serialize_bn(art.network);
  }
  return 0;
}

int cmd_witness(const std::string& which, const Args& a) {
  const ReductionArtifact art = build_artifact(which, a);
  std::optional<Assignment> v;
  if (!a.assignment.empty()) {
    const Configuration bits = Configuration::parse(a.assignment);
    v = bits.bits();
  } else if (which == "klc") {
    v = sat_oracle(art.source);
  } else {
    v = exists_forall_oracle(art.source, art.s);
  }
  if (!v) {
    std::cerr << "negative instance: no witness\n";
    return kExitNo;
  }
  if (which == "klc") {
    std::cout << klc_witness_configuration(art, *v).to_string() << '\n';
  } else if (which == "general") {
    std::cout << format_schedule(witness_schedule_general(art, *v), art.network.names()) << '\n';
  } else {
    std::cout << format_schedule(witness_schedule_even(art, *v), art.network.names()) << '\n';
  }
  return kExitYes;
}

int cmd_solve(const std::string& which, const Args& a) {
  const BooleanNetwork f = load_network(a);
  const CycleLength len = length_of(a);
  SearchOptions o;
  o.budget = a.budget;
  o.samples = a.samples;
  o.seed = a.seed;
  o.cap = a.cap;
  o.threads = a.threads;
  Decision d;
  if (which == "klc") {
    d = solve_klc(f, len, a.cap);
  } else if (which == "bs-klc") {
    d = solve_bs_klc(f, len, o);
  } else {
    d = solve_bs_no_klc(f, len, o);
  }
  if (a.json) {
    std::cout << decision_json(d, f).dump() << '\n';
  } else {
    std::cout << to_string(d.answer) << " (" << to_string(d.mode) << ", " << d.schedules_examined << " schedules, "
              << d.configurations_examined << " configurations)\n";
    if (d.schedule) std::cout << "schedule " << format_schedule(*d.schedule, f.names()) << '\n';
    if (d.configuration) std::cout << "configuration " << d.configuration->to_string() << '\n';
  }
  switch (d.answer) {
    case Answer::yes:
      return kExitYes;
    case Answer::no:
      return kExitNo;
    case Answer::unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

int cmd_verify(const std::string& which, const Args& a) {
  SuiteOptions o;
  o.seed = a.seed;
  o.instances = a.instances;
  o.samples = a.verify_samples;
  std::vector<SuiteResult> results;
  auto want = [&](const char* name) { return which == name || which == "all"; };
  if (want("separation")) results.push_back(verify_separation());
  if (want("bell")) results.push_back(verify_ordered_bell());
  if (want("klc")) results.push_back(verify_klc_equivalence(o));
  if (want("bs-klc")) results.push_back(verify_bs_klc_equivalence());
  if (want("even")) {
    results.push_back(verify_positive(Construction::bs_no_klc_even, 4, o));
    results.push_back(verify_negative(Construction::bs_no_klc_even, 4, o));
  }
  if (want("two")) {
    results.push_back(verify_positive(Construction::bs_no_klc_2, 2, o));
    results.push_back(verify_negative(Construction::bs_no_klc_2, 2, o));
  }
  if (want("general")) {
    results.push_back(verify_clock(3));
    results.push_back(verify_positional_rule(o));
    for (std::size_t k : {3u, 4u}) {
      results.push_back(verify_positive(Construction::bs_no_klc_general, k, o));
      results.push_back(verify_negative(Construction::bs_no_klc_general, k, o));
    }
  }
  if (want("parallelize")) results.push_back(verify_parallelize(o));
  if (want("fixed-points")) results.push_back(verify_fixed_point_invariance(o));
  if (want("structure")) results.push_back(verify_structure(o));
  bool ok = true;
  for (const SuiteResult& r : results) {
    ok = ok && r.passed();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.seconds << " s)\n";
    for (const auto& note : r.notes) std::cout << "  " << note << '\n';
    for (const auto& f : r.failures) std::cout << "  counterexample: " << f << '\n';
    if (r.failure_count > r.failures.size()) {
      std::cout << "  ... " << r.failure_count - r.failures.size() << " more\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean networks under block-sequential update schedules"};
  app.require_subcommand(1);
  Args a;

  auto net_opt = [&](CLI::App* sub) { sub->add_option("--net", a.net, "network file (stdin when absent)"); };
  auto cap_opt = [&](CLI::App* sub) {
    sub->add_option("--cap", a.cap, "largest network enumerated exhaustively")->capture_default_str();
  };
  auto formula_opts = [&](CLI::App* sub) {
    sub->add_option("--cnf", a.cnf, "DIMACS formula")->required();
    sub->add_option("-k", a.k, "cycle length")->capture_default_str();
    sub->add_option("--exists", a.exists, "number of existential variables s");
  };

  auto* simulate = app.add_subcommand("simulate", "trajectory of one configuration");
  net_opt(simulate);
  simulate->add_option("--schedule", a.schedule, "schedule, e.g. {a,b}>{c}")->capture_default_str();
  simulate->add_option("--from", a.from, "initial configuration")->required();
  simulate->add_option("--steps", a.steps, "fixed number of steps instead of stopping on a cycle");
  simulate->add_flag("--json", a.json);

  auto* attr = app.add_subcommand("attractors", "all limit-cycles under a schedule");
  net_opt(attr);
  cap_opt(attr);
  attr->add_option("--schedule", a.schedule, "schedule, e.g. {a,b}>{c}")->capture_default_str();
  attr->add_flag("--json", a.json);

  auto* digraph = app.add_subcommand("digraph", "signed interaction digraph");
  net_opt(digraph);
  cap_opt(digraph);
  digraph->add_flag("--dot", a.dot, "Graphviz output");
  digraph->add_flag("--json", a.json);
  digraph->add_flag("--truth-tables", a.truth_tables, "local functions as truth tables over their in-neighbors");

  auto* bell = app.add_subcommand("bell", "number of schedules on n components");
  bell->add_option("n", a.bell_n)->required();

  auto* schedules = app.add_subcommand("schedules", "list schedules in enumeration order");
  schedules->add_option("-n", a.n, "number of components");
  net_opt(schedules);
  schedules->add_option("--index", a.index, "print only the schedule at this position");
  schedules->add_option("--budget", a.budget, "refuse to list more schedules than this")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "build a network from a 3-CNF formula");
  reduce->require_subcommand(1);
  auto* witness = app.add_subcommand("witness", "witness schedule (or configuration) of a positive instance");
  witness->require_subcommand(1);
  for (const char* name : {"klc", "even", "two", "general"}) {
    auto* r = reduce->add_subcommand(name);
    formula_opts(r);
    r->add_option("--sidecar", a.sidecar, "write role map and parameters as JSON");
    r->add_flag("--json", a.json, "print the JSON sidecar instead of the network");
    auto* w = witness->add_subcommand(name);
    formula_opts(w);
    w->add_option("--assign", a.assignment, "existential assignment as a bit string (default: oracle)");
  }

  auto* solve = app.add_subcommand("solve", "decide a limit-cycle problem");
  solve->require_subcommand(1);
  for (const char* name : {"klc", "bs-klc", "bs-no-klc"}) {
    auto* s = solve->add_subcommand(name);
    net_opt(s);
    cap_opt(s);
    s->add_option("-k", a.k, "cycle length")->capture_default_str();
    s->add_flag("--at-least", a.at_least, "count cycles of length >= k");
    s->add_flag("--at-most", a.at_most, "count cycles of length <= k");
    s->add_option("--budget", a.budget, "exhaustive schedule search up to this many schedules")->capture_default_str();
    s->add_option("--samples", a.samples, "schedules drawn in sampled mode")->capture_default_str();
    s->add_option("--seed", a.seed)->capture_default_str();
    s->add_option("--threads", a.threads)->capture_default_str();
    s->add_flag("--json", a.json);
  }

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  const std::pair<const char*, const char*> suites[] = {
      {"separation", "phi_2 of the swap and rotation networks"},
      {"bell", "ordered Bell numbers, enumeration and ranking"},
      {"klc", "satisfiability vs k-cycles under parallel update"},
      {"bs-klc", "satisfiability vs k-cycles under some schedule"},
      {"even", "single-clock construction, k = 4"},
      {"two", "latched-clock construction, k = 2"},
      {"general", "schedule-coded clock construction, k = 3 and 4"},
      {"parallelize", "parallelized network vs block-sequential step"},
      {"fixed-points", "fixed points across schedules"},
      {"structure", "construction sizes"},
      {"all", "every suite"},
  };
  for (const auto& [name, about] : suites) {
    auto* v = verify->add_subcommand(name, about);
    v->add_option("--seed", a.seed)->capture_default_str();
    v->add_option("--instances", a.instances, "random instances per construction")->capture_default_str();
    v->add_option("--samples", a.verify_samples, "sampled schedules per negative instance")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto chosen = [](CLI::App* parent) { return parent->get_subcommands().front()->get_name(); };
  try {
    if (*simulate) return cmd_simulate(a);
    if (*attr) return cmd_attractors(a);
    if (*digraph) return cmd_digraph(a);
    if (*bell) {
      std::cout << ordered_bell(a.bell_n).str() << '\n';
      return 0;
    }
    if (*schedules) return cmd_schedules(a);
    if (*reduce) return cmd_reduce(chosen(reduce), a);
    if (*witness) return cmd_witness(chosen(witness), a);
    if (*solve) return cmd_solve(chosen(solve), a);
    if (*verify) return cmd_verify(chosen(verify), a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
