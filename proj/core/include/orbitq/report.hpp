// report.hpp
//
// Canonical machine-readable result records.  A Report carries the
// configuration echo, one row per checked quantity, the aggregate verdict,
// and a reproducibility fingerprint.  Serialization is canonical JSON:
// object keys sorted, arrays in construction order, so identical inputs
// produce identical bytes (timing excluded by normalize_timing).

#ifndef ORBITQ_REPORT_HPP
#define ORBITQ_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orbitq {

struct ReportRow {
  std::string label;
  double value = 0.0;   // residual / statistic
  double se = 0.0;      // MC standard error (0 for deterministic rules)
  double scale = 0.0;   // context norm (e.g. the compared operator's size)
  bool pass = false;
};

struct Report {
  std::string check;                          // e.g. "theorem", "tuynman"
  std::map<std::string, std::string> config;  // input echo
  std::vector<ReportRow> rows;
  double max_value = 0.0;
  double tol = 0.0;
  std::string tolerance_mode;  // "absolute" | "se-multiple"
  bool pass = false;
  double elapsed_seconds = 0.0;
  std::uint64_t seed = 0;
  int cap = 0;

  std::string to_json() const;
};

// Rewrites the timing block of a serialized report to zero; for byte
// comparisons between runs.
std::string normalize_timing(const std::string& report_json);

}  // namespace orbitq

#endif
