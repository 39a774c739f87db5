#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bsnet/digraph.hpp"
#include "bsnet/update.hpp"

namespace bsnet {

/// Trajectory of one configuration: `transient` steps lead into a cycle of
/// `period` configurations, listed in visiting order.
struct Orbit {
  std::size_t transient = 0;
  std::size_t period = 0;
  std::vector<Configuration> cycle;
};

/// A limit-cycle, rotated so that its smallest configuration in textual
/// order comes first. A fixed point is a limit-cycle of length one.
struct Attractor {
  std::vector<Configuration> cycle;

  std::size_t length() const noexcept { return cycle.size(); }
  friend bool operator==(const Attractor&, const Attractor&) = default;
};

/// All attractors of f^(W), grouped by length.
class AttractorReport {
 public:
  AttractorReport() = default;
  AttractorReport(std::size_t n, std::map<std::size_t, std::vector<Attractor>> by_length);

  std::size_t network_size() const noexcept { return n_; }
  const std::map<std::size_t, std::vector<Attractor>>& by_length() const noexcept { return by_length_; }
  /// phi_k: number of limit-cycles of length exactly k.
  std::size_t phi(std::size_t k) const;
  /// Number of limit-cycles of length at least k.
  std::size_t phi_geq(std::size_t k) const;
  /// Number of limit-cycles of length at most k.
  std::size_t phi_leq(std::size_t k) const;
  std::size_t total() const;
  /// Phi_k: every configuration lying on a limit-cycle of length k.
  std::vector<Configuration> configurations_in(std::size_t k) const;

  friend bool operator==(const AttractorReport&, const AttractorReport&) = default;

 private:
  std::size_t n_ = 0;
  std::map<std::size_t, std::vector<Attractor>> by_length_;
};

/// Which cycle lengths a query is about.
struct CycleLength {
  enum class Kind { exactly, at_least, at_most };
  Kind kind = Kind::exactly;
  std::size_t k = 1;

  static CycleLength exactly(std::size_t k) { return {Kind::exactly, k}; }
  static CycleLength at_least(std::size_t k) { return {Kind::at_least, k}; }
  static CycleLength at_most(std::size_t k) { return {Kind::at_most, k}; }

  bool matches(std::size_t length) const noexcept {
    switch (kind) {
      case Kind::exactly:
        return length == k;
      case Kind::at_least:
        return length >= k;
      case Kind::at_most:
        return length <= k;
    }
    return false;
  }
};

/// Rotates a cycle into canonical form.
Attractor canonical_attractor(std::vector<Configuration> cycle);

Orbit orbit(const BooleanNetwork& f, const UpdateSchedule& w, const Configuration& x);
Orbit orbit(const Stepper& step, Word x);

/// Exhaustive over all 2^n configurations. Throws SizeError above `cap`.
AttractorReport attractors(const BooleanNetwork& f, const UpdateSchedule& w, std::size_t cap = kDefaultExhaustionCap);
AttractorReport attractors(const Stepper& step, std::size_t cap = kDefaultExhaustionCap);

/// First attractor (in configuration sweep order) whose length satisfies
/// `length`; stops as soon as one is found. When `visited` is given, the
/// number of configurations explored is added to it.
std::optional<Attractor> find_attractor(const Stepper& step, CycleLength length,
                                        std::size_t cap = kDefaultExhaustionCap, std::uint64_t* visited = nullptr);

std::size_t phi(const BooleanNetwork& f, const UpdateSchedule& w, std::size_t k);
std::size_t phi_geq(const BooleanNetwork& f, const UpdateSchedule& w, std::size_t k);
std::size_t phi_leq(const BooleanNetwork& f, const UpdateSchedule& w, std::size_t k);

/// True iff (f^(W))^k(x) = x and no smaller positive power returns to x.
/// Runs k steps; no enumeration.
bool is_in_k_cycle(const BooleanNetwork& f, const UpdateSchedule& w, const Configuration& x, std::size_t k);
bool is_in_k_cycle(const Stepper& step, Word x, std::size_t k);

}  // namespace bsnet
