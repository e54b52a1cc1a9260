#pragma once

#include <json.hpp>

#include "lcone/report.hpp"

namespace lcone {

/// Deterministic JSON form of an estimate report. Wall-clock time is only
/// included when `include_timing` is set, so seeded runs stay byte-identical.
nlohmann::ordered_json report_to_json(const EstimateReport& rep, bool include_timing);

nlohmann::ordered_json plan_to_json(const ShotPlan& plan);

}  // namespace lcone
