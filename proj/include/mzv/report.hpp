#pragma once

// Structured result of one CLI invocation.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace mzv {

struct ResidualEntry {
  std::string instance;
  /// Decimal string: "0" or scientific notation such as "3.1e-205".
  std::string residual;
};

/// True iff residual < 10^-(digits-10).
bool residual_passes(const std::string& residual, int digits);

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  /// "pass", "fail", "found" or "none".
  std::string status = "pass";
  nlohmann::json data = nlohmann::json::object();
  std::vector<ResidualEntry> residuals;
  int digits = 0;
  std::int64_t elapsed_ms = 0;

  /// "pass" if every residual passes, else "fail".
  std::string residual_status() const;

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);
};

}  // namespace mzv
