#pragma once

#include <vector>

#include "json.hpp"
#include "metric_lines/lines.hpp"
#include "metric_lines/verify.hpp"

namespace mlines {

inline constexpr const char* kSchema = "metric-lines/1";

// {"schema", "n", "lines": [[v, ...], ...], "count", "universal"}
nlohmann::json to_json(const LineSystem& system);
// One JSON-lines record.
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const TheoremVerdict& verdict);
nlohmann::json to_json(const Diam3Verdict& verdict);
nlohmann::json to_json(const std::vector<FamilyCheck>& checks);

}  // namespace mlines
