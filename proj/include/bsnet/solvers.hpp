#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bsnet/dynamics.hpp"

namespace bsnet {

enum class Answer { yes, no, unknown };
enum class SearchMode { exhaustive, sampled };

std::string to_string(Answer a);
std::string to_string(SearchMode m);

/// Outcome of a decision procedure. For k-LC and BS k-LC a yes carries a
/// configuration on a matching cycle (and the schedule); for BS no k-LC a
/// yes carries the schedule alone.
struct Decision {
  Answer answer = Answer::unknown;
  std::optional<UpdateSchedule> schedule;
  std::optional<Configuration> configuration;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t schedules_examined = 0;
  std::uint64_t configurations_examined = 0;
};

struct SearchOptions {
  /// Schedules are enumerated exhaustively when B(n) <= budget.
  std::uint64_t budget = 1'000'000;
  /// Number of uniformly drawn schedules in sampled mode.
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultExhaustionCap;
  /// Worker count; results do not depend on it.
  std::size_t threads = 1;
};

/// Is there a cycle of matching length under parallel update?
Decision solve_klc(const BooleanNetwork& f, CycleLength length, std::size_t cap = kDefaultExhaustionCap);

/// Is there a schedule with a cycle of matching length? Exhaustive mode scans
/// schedules in enumeration order and returns the first hit; a sampled-mode
/// failure answers no with mode = sampled.
Decision solve_bs_klc(const BooleanNetwork& f, CycleLength length, const SearchOptions& options = {});

/// Is there a schedule without any cycle of matching length? A sampled-mode
/// failure answers unknown.
Decision solve_bs_no_klc(const BooleanNetwork& f, CycleLength length, const SearchOptions& options = {});

/// Re-checks a yes certificate: the configuration lies on a cycle of
/// matching length (existence problems), or the schedule admits no such
/// cycle (BS no k-LC). Returns false for non-yes decisions.
bool verify_existence_certificate(const BooleanNetwork& f, CycleLength length, const Decision& d);
bool verify_absence_certificate(const BooleanNetwork& f, CycleLength length, const Decision& d,
                                std::size_t cap = kDefaultExhaustionCap);

}  // namespace bsnet
