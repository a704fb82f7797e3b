#include "conekit/config.hpp"

#include "conekit/error.hpp"

#include <cmath>

namespace conekit {

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "tau",     "tau_sing", "tau_lp",       "tau_rank",     "tau_expm",
      "tau_rel", "tau_res",  "spod_max_dim", "norm_max_dim", "lp_max_vars"};
  return keys;
}

namespace {

std::size_t as_count(const std::string& key, double value) {
  if (value < 1.0 || value != std::floor(value) || value > 1e6) {
    throw Error(ErrorCode::invalid_argument,
                "config '" + key + "' must be a positive integer");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Config apply_overrides(Config base, const std::map<std::string, double>& overrides) {
  for (const auto& [key, value] : overrides) {
    if (!std::isfinite(value) || value <= 0.0) {
      throw Error(ErrorCode::invalid_argument,
                  "config '" + key + "' must be finite and positive");
    }
    if (key == "tau") base.tau = value;
    else if (key == "tau_sing") base.tau_sing = value;
    else if (key == "tau_lp") base.tau_lp = value;
    else if (key == "tau_rank") base.tau_rank = value;
    else if (key == "tau_expm") base.tau_expm = value;
    else if (key == "tau_rel") base.tau_rel = value;
    else if (key == "tau_res") base.tau_res = value;
    else if (key == "spod_max_dim") base.spod_max_dim = as_count(key, value);
    else if (key == "norm_max_dim") base.norm_max_dim = as_count(key, value);
    else if (key == "lp_max_vars") base.lp_max_vars = as_count(key, value);
    else throw Error(ErrorCode::invalid_argument, "unknown config key '" + key + "'");
  }
  return base;
}

}  // namespace conekit
