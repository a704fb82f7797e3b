#pragma once

#include "conekit/config.hpp"
#include "conekit/linalg.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace conekit {

struct LinearRow {
  Vec row;
  double rhs = 0.0;
};

/// maximize objective . x
///   s.t. row . x == rhs  (equalities)
///        row . x >= rhs  (inequalities_ge)
///        x_j >= lower_bounds[j]  (-infinity for a free variable)
///
/// A zero objective makes this a pure feasibility problem.
struct LinProgram {
  explicit LinProgram(std::size_t num_vars);

  std::size_t num_vars() const { return static_cast<std::size_t>(objective.size()); }

  void add_equality(Vec row, double rhs);
  void add_ge(Vec row, double rhs);
  /// Stored as (-row) . x >= -rhs.
  void add_le(Vec row, double rhs);
  void set_free(std::size_t j) { lower_bounds[j] = -std::numeric_limits<double>::infinity(); }

  Vec objective;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities_ge;
  std::vector<double> lower_bounds;  ///< default 0
};

enum class LpStatus { optimal, feasible, infeasible, unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Vec point;           ///< set for optimal / feasible
  double value = 0.0;  ///< objective at point
  std::size_t iterations = 0;
  double phase1_residual = 0.0;  ///< phase-1 optimum (sum of artificials)

  bool has_point() const { return status == LpStatus::optimal || status == LpStatus::feasible; }
};

/// Dense two-phase simplex with Bland's rule. Every returned point is
/// re-validated with certify_feasible_point; a failure there throws
/// Error(internal). Throws Error(guard_exceeded) above cfg.lp_max_vars
/// variables and Error(numeric) when the iteration cap
/// 10 * (columns + rows)^2 is hit.
LpOutcome solve(const LinProgram& p, const Config& cfg = {});

/// True iff every constraint holds within cfg.tau_lp, scaled by
/// max(1, |rhs|, sum_k |a_k x_k|) per row.
bool certify_feasible_point(const LinProgram& p, const Vec& x, const Config& cfg = {});

}  // namespace conekit
