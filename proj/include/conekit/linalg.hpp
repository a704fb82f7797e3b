#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string_view>

namespace conekit {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

struct SingularValueRange {
  double min = 0.0;
  double max = 0.0;

  /// sigma_min <= rel_tol * sigma_max (the zero matrix is singular).
  bool rank_deficient(double rel_tol) const { return !(min > rel_tol * max); }
};

SingularValueRange singular_value_range(const Mat& a);

/// Throws Error(invalid_argument) naming `what` if any entry is NaN or infinite.
void require_finite(const Mat& a, std::string_view what);
void require_finite(const Vec& v, std::string_view what);

/// Throws Error(dimension_mismatch) when `got != want`.
void require_dim(std::size_t got, std::size_t want, std::string_view what);

void require_square(const Mat& a, std::string_view what);

/// Max absolute row sum.
double inf_norm(const Mat& a);

}  // namespace conekit
