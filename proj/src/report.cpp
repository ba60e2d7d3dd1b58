#include "mzv/report.hpp"

#include <algorithm>

#include "mzv/errors.hpp"
#include "mzv/real.hpp"

namespace mzv {

bool residual_passes(const std::string& residual, int digits) {
  constexpr mpfr_prec_t kBits = 64;
  const Real r = Real::parse(residual, kBits).abs();
  return r < ten_to_minus(digits - 10, kBits);
}

std::string RunReport::residual_status() const {
  const bool ok = std::all_of(residuals.begin(), residuals.end(), [&](const ResidualEntry& e) {
    return residual_passes(e.residual, digits);
  });
  return ok ? "pass" : "fail";
}

nlohmann::json RunReport::to_json() const {
  auto rs = nlohmann::json::array();
  for (const auto& e : residuals) rs.push_back({{"instance", e.instance}, {"residual", e.residual}});
  return {{"command", command}, {"inputs", inputs},     {"status", status},
          {"data", data},       {"residuals", rs},      {"digits", digits},
          {"elapsed_ms", elapsed_ms}};
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.status = j.at("status").get<std::string>();
    r.data = j.at("data");
    for (const auto& e : j.at("residuals")) {
      r.residuals.push_back({e.at("instance").get<std::string>(), e.at("residual").get<std::string>()});
    }
    r.digits = j.at("digits").get<int>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed run report: ") + e.what());
  }
}

}  // namespace mzv
