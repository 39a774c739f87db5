#include "bsnet/solvers.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <thread>

#include "bsnet/error.hpp"

namespace bsnet {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes:
      return "yes";
    case Answer::no:
      return "no";
    case Answer::unknown:
      return "unknown";
  }
  return "?";
}

std::string to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "sampled"; }

namespace {

void check_cap(const BooleanNetwork& f, std::size_t cap) {
  if (f.size() > cap) {
    throw SizeError("search refused: " + std::to_string(f.size()) + " components exceed the cap of " +
                    std::to_string(cap));
  }
}

struct Probe {
  std::optional<Attractor> found;
  std::uint64_t visited = 0;
};

// Evaluates schedules in batches; the hit reported is the first one in
// candidate order whatever the thread count, and effort counts only the
// candidates up to it.
class ScheduleScan {
 public:
  ScheduleScan(const BooleanNetwork& f, CycleLength length, const SearchOptions& o)
      : net_(std::make_shared<const CompiledNetwork>(f)), length_(length), options_(o) {}

  // Stops at the first schedule whose probe found a cycle iff `stop_on_found`.
  std::optional<std::pair<UpdateSchedule, Probe>> run(const std::function<std::optional<UpdateSchedule>()>& next,
                                                      bool stop_on_found, Decision& d) {
    const std::size_t workers = std::max<std::size_t>(1, options_.threads);
    const std::size_t batch_size = workers == 1 ? 1 : 16 * workers;
    std::vector<UpdateSchedule> batch;
    while (true) {
      batch.clear();
      while (batch.size() < batch_size) {
        auto w = next();
        if (!w) break;
        batch.push_back(std::move(*w));
      }
      if (batch.empty()) return std::nullopt;
      std::vector<Probe> probes(batch.size());
      evaluate(batch, probes, workers);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        ++d.schedules_examined;
        d.configurations_examined += probes[i].visited;
        if (probes[i].found.has_value() == stop_on_found) return std::pair{batch[i], std::move(probes[i])};
      }
    }
  }

 private:
  Probe probe(const UpdateSchedule& w) const {
    Probe p;
    p.found = find_attractor(Stepper(net_, w), length_, options_.cap, &p.visited);
    return p;
  }

  void evaluate(const std::vector<UpdateSchedule>& batch, std::vector<Probe>& probes, std::size_t workers) const {
    if (workers == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) probes[i] = probe(batch[i]);
      return;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < batch.size(); i += workers) probes[i] = probe(batch[i]);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::shared_ptr<const CompiledNetwork> net_;
  CycleLength length_;
  SearchOptions options_;
};

std::function<std::optional<UpdateSchedule>()> candidates(std::size_t n, const SearchOptions& o, SearchMode& mode) {
  if (ordered_bell(n) <= BigInt(o.budget)) {
    mode = SearchMode::exhaustive;
    auto e = std::make_shared<ScheduleEnumerator>(n);
    return [e] { return e->next(); };
  }
  mode = SearchMode::sampled;
  auto rng = std::make_shared<std::mt19937_64>(o.seed);
  auto left = std::make_shared<std::uint64_t>(o.samples);
  return [rng, left, n]() -> std::optional<UpdateSchedule> {
    if (*left == 0) return std::nullopt;
    --*left;
    return sample_schedule(n, *rng);
  };
}

}  // namespace

Decision solve_klc(const BooleanNetwork& f, CycleLength length, std::size_t cap) {
  check_cap(f, cap);
  Decision d;
  d.mode = SearchMode::exhaustive;
  d.schedules_examined = 1;
  const UpdateSchedule w = UpdateSchedule::parallel(f.size());
  auto found = find_attractor(Stepper(f, w), length, cap, &d.configurations_examined);
  d.answer = found ? Answer::yes : Answer::no;
  if (found) {
    d.schedule = w;
    d.configuration = found->cycle.front();
  }
  return d;
}

Decision solve_bs_klc(const BooleanNetwork& f, CycleLength length, const SearchOptions& options) {
  check_cap(f, options.cap);
  Decision d;
  auto next = candidates(f.size(), options, d.mode);
  ScheduleScan scan(f, length, options);
  if (auto hit = scan.run(next, true, d)) {
    d.answer = Answer::yes;
    d.schedule = hit->first;
    d.configuration = hit->second.found->cycle.front();
  } else {
    d.answer = Answer::no;
  }
  return d;
}

Decision solve_bs_no_klc(const BooleanNetwork& f, CycleLength length, const SearchOptions& options) {
  check_cap(f, options.cap);
  Decision d;
  auto next = candidates(f.size(), options, d.mode);
  ScheduleScan scan(f, length, options);
  if (auto hit = scan.run(next, false, d)) {
    d.answer = Answer::yes;
    d.schedule = hit->first;
  } else {
    d.answer = d.mode == SearchMode::exhaustive ? Answer::no : Answer::unknown;
  }
  return d;
}

bool verify_existence_certificate(const BooleanNetwork& f, CycleLength length, const Decision& d) {
  if (d.answer != Answer::yes || !d.schedule || !d.configuration) return false;
  if (d.schedule->size() != f.size() || d.configuration->size() != f.size()) return false;
  const Orbit o = orbit(f, *d.schedule, *d.configuration);
  return o.transient == 0 && length.matches(o.period);
}

bool verify_absence_certificate(const BooleanNetwork& f, CycleLength length, const Decision& d, std::size_t cap) {
  if (d.answer != Answer::yes || !d.schedule || d.schedule->size() != f.size()) return false;
  return !find_attractor(Stepper(f, *d.schedule), length, cap).has_value();
}

}  // namespace bsnet
