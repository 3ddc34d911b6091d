#include "orbitq/report.hpp"

#include "json.hpp"

namespace orbitq {

namespace {
constexpr int kSchemaVersion = 1;

#ifndef ORBITQ_VERSION
#define ORBITQ_VERSION "0.0.0"
#endif
}  // namespace

std::string Report::to_json() const {
  nlohmann::json j;  // std::map-backed: keys serialize sorted
  j["schema_version"] = kSchemaVersion;
  j["check"] = check;
  j["config"] = config;
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["label"] = r.label;
    row["value"] = r.value;
    row["se"] = r.se;
    row["scale"] = r.scale;
    row["pass"] = r.pass;
    rows_json.push_back(row);
  }
  j["rows"] = rows_json;
  j["summary"] = {{"max_value", max_value},
                  {"tol", tol},
                  {"tolerance_mode", tolerance_mode},
                  {"pass", pass}};
  j["timing"] = {{"elapsed_seconds", elapsed_seconds}};
  j["fingerprint"] = {{"seed", seed}, {"cap", cap}, {"version", ORBITQ_VERSION}};
  return j.dump(2) + "\n";
}

std::string normalize_timing(const std::string& report_json) {
  nlohmann::json j = nlohmann::json::parse(report_json);
  if (j.contains("timing")) j["timing"]["elapsed_seconds"] = 0.0;
  return j.dump(2) + "\n";
}

}  // namespace orbitq
