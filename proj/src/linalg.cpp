#include "conekit/linalg.hpp"

#include "conekit/error.hpp"

#include <string>

namespace conekit {

SingularValueRange singular_value_range(const Mat& a) {
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  // s is sorted descending; a tall/wide matrix has min(rows, cols) values, so
  // a rectangular map from R^n with n > rows always has a kernel.
  double smin = s(s.size() - 1);
  if (a.cols() > a.rows()) smin = 0.0;
  return {smin, s(0)};
}

void require_finite(const Mat& a, std::string_view what) {
  if (!a.allFinite()) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " contains non-finite entries");
  }
}

void require_finite(const Vec& v, std::string_view what) {
  if (!v.allFinite()) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " contains non-finite entries");
  }
}

void require_dim(std::size_t got, std::size_t want, std::string_view what) {
  if (got != want) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + ": dimension " + std::to_string(got) +
                    ", expected " + std::to_string(want));
  }
}

void require_square(const Mat& a, std::string_view what) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + " must be square, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

double inf_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace conekit
