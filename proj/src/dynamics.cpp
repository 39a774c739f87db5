#include "bsnet/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "bsnet/error.hpp"

namespace bsnet {

namespace {

// Sort key matching textual order: component 0 is the most significant bit.
Word text_key(const Configuration& c) {
  Word r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) r = (r << 1) | (c[i] ? 1u : 0u);
  return r;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw SizeError("exhaustive enumeration refused: " + std::to_string(n) + " components exceed the cap of " +
                    std::to_string(cap));
  }
}

std::vector<Configuration> to_configs(std::span<const Word> words, std::size_t n) {
  std::vector<Configuration> out;
  out.reserve(words.size());
  for (Word w : words) out.emplace_back(n, w);
  return out;
}

}  // namespace

AttractorReport::AttractorReport(std::size_t n, std::map<std::size_t, std::vector<Attractor>> by_length)
    : n_(n), by_length_(std::move(by_length)) {
  for (auto& [len, list] : by_length_) {
    std::sort(list.begin(), list.end(), [](const Attractor& a, const Attractor& b) {
      return text_key(a.cycle.front()) < text_key(b.cycle.front());
    });
  }
}

std::size_t AttractorReport::phi(std::size_t k) const {
  auto it = by_length_.find(k);
  return it == by_length_.end() ? 0 : it->second.size();
}

std::size_t AttractorReport::phi_geq(std::size_t k) const {
  std::size_t total = 0;
  for (auto it = by_length_.lower_bound(k); it != by_length_.end(); ++it) total += it->second.size();
  return total;
}

std::size_t AttractorReport::phi_leq(std::size_t k) const {
  std::size_t total = 0;
  for (auto it = by_length_.begin(); it != by_length_.end() && it->first <= k; ++it) total += it->second.size();
  return total;
}

std::size_t AttractorReport::total() const { return phi_geq(1); }

std::vector<Configuration> AttractorReport::configurations_in(std::size_t k) const {
  std::vector<Configuration> out;
  if (auto it = by_length_.find(k); it != by_length_.end()) {
    for (const Attractor& a : it->second) out.insert(out.end(), a.cycle.begin(), a.cycle.end());
  }
  std::sort(out.begin(), out.end(), [](const Configuration& a, const Configuration& b) {
    return text_key(a) < text_key(b);
  });
  return out;
}

Attractor canonical_attractor(std::vector<Configuration> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end(), [](const Configuration& a, const Configuration& b) {
    return text_key(a) < text_key(b);
  });
  std::rotate(cycle.begin(), smallest, cycle.end());
  return Attractor{std::move(cycle)};
}

Orbit orbit(const Stepper& step, Word x) {
  std::unordered_map<Word, std::size_t> first_visit;
  std::vector<Word> path;
  while (true) {
    auto [it, inserted] = first_visit.emplace(x, path.size());
    if (!inserted) {
      const std::size_t start = it->second;
      Orbit o;
      o.transient = start;
      o.period = path.size() - start;
      o.cycle = to_configs(std::span(path).subspan(start), step.size());
      return o;
    }
    path.push_back(x);
    x = step(x);
  }
}

Orbit orbit(const BooleanNetwork& f, const UpdateSchedule& w, const Configuration& x) {
  check_configuration(f, x);
  return orbit(Stepper(f, w), x.bits());
}

namespace {

// Sweeps all configurations; every attractor is reported once, to `on_cycle`,
// which returns false to stop the sweep.
template <typename OnCycle>
std::uint64_t sweep_attractors(const Stepper& step, std::size_t cap, OnCycle&& on_cycle) {
  const std::size_t n = step.size();
  check_cap(n, cap);
  enum : std::uint8_t { unseen = 0, on_path = 1, settled = 2 };
  const Word space = Word{1} << n;
  std::vector<std::uint8_t> color(space, unseen);
  std::vector<Word> path;
  std::uint64_t visited = 0;
  for (Word start = 0; start < space; ++start) {
    if (color[start] != unseen) continue;
    path.clear();
    Word x = start;
    while (color[x] == unseen) {
      color[x] = on_path;
      path.push_back(x);
      x = step(x);
    }
    bool keep_going = true;
    if (color[x] == on_path) {
      auto pos = std::find(path.rbegin(), path.rend(), x);
      const auto begin = path.size() - static_cast<std::size_t>(pos - path.rbegin()) - 1;
      keep_going = on_cycle(std::span<const Word>(path).subspan(begin));
    }
    for (Word p : path) color[p] = settled;
    visited += path.size();
    if (!keep_going) break;
  }
  return visited;
}

}  // namespace

AttractorReport attractors(const Stepper& step, std::size_t cap) {
  std::map<std::size_t, std::vector<Attractor>> by_length;
  sweep_attractors(step, cap, [&](std::span<const Word> cycle) {
    by_length[cycle.size()].push_back(canonical_attractor(to_configs(cycle, step.size())));
    return true;
  });
  return AttractorReport(step.size(), std::move(by_length));
}

AttractorReport attractors(const BooleanNetwork& f, const UpdateSchedule& w, std::size_t cap) {
  check_cap(f.size(), cap);
  return attractors(Stepper(f, w), cap);
}

std::optional<Attractor> find_attractor(const Stepper& step, CycleLength length, std::size_t cap,
                                        std::uint64_t* visited) {
  std::optional<Attractor> found;
  const std::uint64_t count = sweep_attractors(step, cap, [&](std::span<const Word> cycle) {
    if (!length.matches(cycle.size())) return true;
    found = canonical_attractor(to_configs(cycle, step.size()));
    return false;
  });
  if (visited) *visited += count;
  return found;
}

std::size_t phi(const BooleanNetwork& f, const UpdateSchedule& w, std::size_t k) { return attractors(f, w).phi(k); }

std::size_t phi_geq(const BooleanNetwork& f, const UpdateSchedule& w, std::size_t k) {
  return attractors(f, w).phi_geq(k);
}

std::size_t phi_leq(const BooleanNetwork& f, const UpdateSchedule& w, std::size_t k) {
  return attractors(f, w).phi_leq(k);
}

bool is_in_k_cycle(const Stepper& step, Word x, std::size_t k) {
  if (k == 0) return false;
  Word y = x;
  for (std::size_t l = 1; l < k; ++l) {
    y = step(y);
    if (y == x) return false;
  }
  return step(y) == x;
}

bool is_in_k_cycle(const BooleanNetwork& f, const UpdateSchedule& w, const Configuration& x, std::size_t k) {
  check_configuration(f, x);
  return is_in_k_cycle(Stepper(f, w), x.bits(), k);
}

}  // namespace bsnet
