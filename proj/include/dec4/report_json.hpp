#pragma once

// JSON serialization for suite reports. Timings are the only
// non-deterministic field; omit them to get byte-identical output for
// identical inputs.

#include <string>
#include <vector>

#include "dec4/verify.hpp"
#include "json.hpp"

namespace dec4 {

inline nlohmann::ordered_json report_to_json(const SuiteReport& r, bool omit_timings) {
  nlohmann::ordered_json out;
  out["suite"] = r.suite;
  out["mode"] = r.exact_mode ? "exact" : "float";
  out["size"] = r.size;
  out["seeds"] = r.seeds;
  out["pass"] = r.pass();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const IdentityCheck& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["exact_zero"] = c.exact_zero;
    jc["max_residual"] = c.max_residual;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  if (!omit_timings) out["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

inline std::string reports_to_json(const std::vector<SuiteReport>& rs,
                                   bool omit_timings) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const SuiteReport& r : rs) out.push_back(report_to_json(r, omit_timings));
  return out.dump(2) + "\n";
}

}  // namespace dec4
