#pragma once

#include "json.hpp"

#include "bsnet/dynamics.hpp"
#include "bsnet/reductions.hpp"
#include "bsnet/solvers.hpp"

namespace bsnet {

/// {"n", "schedule", "attractors": [{"length", "cycle": [bitstrings]}],
///  "phi": {"<length>": count}}
nlohmann::json report_json(const AttractorReport& report, const BooleanNetwork& f, const UpdateSchedule& w);

/// {"answer", "mode", "schedule"?, "configuration"?,
///  "effort": {"schedules", "configurations"}}
nlohmann::json decision_json(const Decision& d, const BooleanNetwork& f);

/// {"construction", "k", "s", "n", "m", "size",
///  "roles": [{"component", "name", "role", "index"}], "formula": DIMACS}
nlohmann::json artifact_json(const ReductionArtifact& a);

}  // namespace bsnet
