#include "cartan/report.hpp"

#include <algorithm>
#include <sstream>

namespace cartan {

void to_json(Json& j, const CheckResult& c) {
  Json values = Json::object();
  for (const auto& [k, v] : c.values) values[k] = v;
  j = Json{{"name", c.name}, {"ran", c.ran}, {"fired", c.fired}, {"values", std::move(values)}};
}

void from_json(const Json& j, CheckResult& c) {
  c.name = j.at("name").get<std::string>();
  c.ran = j.at("ran").get<bool>();
  c.fired = j.at("fired").get<bool>();
  c.values.clear();
  for (const auto& [k, v] : j.at("values").items()) c.values.emplace_back(k, v.get<std::string>());
}

void to_json(Json& j, const ObstructionReport& r) {
  j = Json{{"case", r.case_name}, {"verdict", to_string(r.verdict)}, {"checks", r.checks}, {"narrative", r.narrative}};
}

void from_json(const Json& j, ObstructionReport& r) {
  r.case_name = j.at("case").get<std::string>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.checks = j.at("checks").get<std::vector<CheckResult>>();
  r.narrative = j.at("narrative").get<std::vector<std::string>>();
}

std::string report_json(const std::vector<ObstructionReport>& reports) {
  return Json{{"reports", reports}}.dump(2) + "\n";
}

std::vector<ObstructionReport> parse_report_json(const std::string& text) {
  return Json::parse(text).at("reports").get<std::vector<ObstructionReport>>();
}

std::string report_text(const ObstructionReport& r) {
  std::ostringstream out;
  out << "case: " << r.case_name << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) {
    for (const auto& [k, v] : c.values) width = std::max(width, k.size());
  }
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << (!c.ran ? "skipped" : c.fired ? "fired" : "not fired") << "\n";
    for (const auto& [k, v] : c.values) {
      out << "    " << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
    }
  }
  for (const auto& line : r.narrative) out << "  - " << line << "\n";
  return out.str();
}

}  // namespace cartan
