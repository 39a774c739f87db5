#include "bsnet/json_io.hpp"

namespace bsnet {

using nlohmann::json;

json report_json(const AttractorReport& report, const BooleanNetwork& f, const UpdateSchedule& w) {
  json out;
  out["n"] = report.network_size();
  out["schedule"] = format_schedule(w, f.names());
  json list = json::array();
  json phi = json::object();
  for (const auto& [len, group] : report.by_length()) {
    phi[std::to_string(len)] = group.size();
    for (const Attractor& a : group) {
      json cycle = json::array();
      for (const Configuration& c : a.cycle) cycle.push_back(c.to_string());
      list.push_back({{"length", len}, {"cycle", cycle}});
    }
  }
  out["attractors"] = list;
  out["phi"] = phi;
  return out;
}

json decision_json(const Decision& d, const BooleanNetwork& f) {
  json out;
  out["answer"] = to_string(d.answer);
  out["mode"] = to_string(d.mode);
  if (d.schedule) out["schedule"] = format_schedule(*d.schedule, f.names());
  if (d.configuration) out["configuration"] = d.configuration->to_string();
  out["effort"] = {{"schedules", d.schedules_examined}, {"configurations", d.configurations_examined}};
  return out;
}

json artifact_json(const ReductionArtifact& a) {
  json out;
  out["construction"] = construction_name(a.construction);
  out["k"] = a.k;
  out["s"] = a.s;
  out["n"] = a.source.variable_count();
  out["m"] = a.source.clause_count();
  out["size"] = a.network.size();
  json roles = json::array();
  for (std::size_t c = 0; c < a.roles.size(); ++c) {
    roles.push_back({{"component", c},
                     {"name", a.network.name(c)},
                     {"role", role_kind_name(a.roles[c].kind)},
                     {"index", a.roles[c].index}});
  }
  out["roles"] = roles;
  out["formula"] = to_dimacs(a.source);
  return out;
}

}  // namespace bsnet
