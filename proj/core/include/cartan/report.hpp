#pragma once

#include "cartan/obstruct.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cartan {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const CheckResult& c);
void from_json(const Json& j, CheckResult& c);
void to_json(Json& j, const ObstructionReport& r);
void from_json(const Json& j, ObstructionReport& r);

/// Stable machine form: keys in fixed order, two-space indent.
std::string report_json(const std::vector<ObstructionReport>& reports);
std::vector<ObstructionReport> parse_report_json(const std::string& text);

/// Human-readable table of one report.
std::string report_text(const ObstructionReport& r);

}  // namespace cartan
