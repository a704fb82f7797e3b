#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace conekit {

/// Tolerances and guards, threaded explicitly through every call.
struct Config {
  double tau = 1e-9;        ///< cone membership / boundary classification
  double tau_sing = 1e-12;  ///< generator singularity, relative to ||G||
  double tau_lp = 1e-8;     ///< LP residuals (scaled by row magnitude)
  double tau_rank = 1e-10;  ///< sigma_min / sigma_max rank threshold
  double tau_expm = 1e-10;  ///< matrix exponential accuracy target
  double tau_rel = 1e-9;    ///< operator-norm identity agreement
  double tau_res = 1e-9;    ///< residual of the planted solve A e = -z

  std::size_t spod_max_dim = 16;  ///< subset sweep is 2^n - 1 LPs
  std::size_t norm_max_dim = 20;  ///< extreme-point enumeration is 2^(n-1)
  std::size_t lp_max_vars = 64;
};

/// Applies named overrides ("tau", "tau_lp", ..., "spod_max_dim"). Unknown
/// names and non-positive values throw Error(invalid_argument).
Config apply_overrides(Config base, const std::map<std::string, double>& overrides);

/// Names accepted by apply_overrides, in a stable order.
const std::vector<std::string>& config_keys();

}  // namespace conekit
