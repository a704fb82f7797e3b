#include "conekit/cone.hpp"

#include "conekit/classify.hpp"
#include "conekit/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace conekit {

ConeSpec ConeSpec::orthant(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "cone dimension must be positive");
  ConeSpec k;
  k.dim_ = n;
  k.kind_ = ConeKind::orthant;
  k.generators_ = Mat::Identity(n, n);
  k.inverse_ = Mat::Identity(n, n);
  return k;
}

ConeSpec ConeSpec::simplicial(Mat generators, const Config& cfg) {
  if (generators.rows() == 0) {
    throw Error(ErrorCode::invalid_argument, "cone dimension must be positive");
  }
  require_square(generators, "cone generators");
  require_finite(generators, "cone generators");
  const auto sv = singular_value_range(generators);
  if (sv.rank_deficient(cfg.tau_sing)) {
    throw Error(ErrorCode::singular,
                "cone generators are numerically singular (sigma_min = " +
                    std::to_string(sv.min) + ")");
  }
  ConeSpec k;
  k.dim_ = static_cast<std::size_t>(generators.rows());
  k.kind_ = ConeKind::simplicial;
  k.inverse_ = generators.partialPivLu().inverse();
  k.generators_ = std::move(generators);
  k.condition_ = sv.max / sv.min;
  return k;
}

Vec ConeSpec::to_orthant(const Vec& x) const {
  require_dim(static_cast<std::size_t>(x.size()), dim_, "vector");
  if (kind_ == ConeKind::orthant) return x;
  return inverse_ * x;
}

Vec ConeSpec::from_orthant(const Vec& y) const {
  require_dim(static_cast<std::size_t>(y.size()), dim_, "vector");
  if (kind_ == ConeKind::orthant) return y;
  return generators_ * y;
}

Vec ConeSpec::unit() const { return from_orthant(Vec::Ones(static_cast<Eigen::Index>(dim_))); }

Mat conjugate(const Mat& a, const ConeSpec& domain, const ConeSpec& codomain) {
  require_dim(static_cast<std::size_t>(a.cols()), domain.dim(), "matrix columns vs domain cone");
  require_dim(static_cast<std::size_t>(a.rows()), codomain.dim(), "matrix rows vs codomain cone");
  Mat out = a;
  if (domain.kind() == ConeKind::simplicial) out = out * domain.generators();
  if (codomain.kind() == ConeKind::simplicial) out = codomain.inverse_generators() * out;
  return out;
}

bool contains(const ConeSpec& k, const Vec& x, const Config& cfg) {
  const Vec y = k.to_orthant(x);
  return y.minCoeff() >= -cfg.tau;
}

BoundaryPosition boundary_position(const ConeSpec& k, const Vec& x, const Config& cfg) {
  const Vec y = k.to_orthant(x);
  BoundaryPosition pos;
  pos.min_coordinate = y.minCoeff();
  if (pos.min_coordinate > cfg.tau) {
    pos.where = Position::interior;
  } else if (pos.min_coordinate >= -cfg.tau) {
    pos.where = Position::boundary;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      if (std::abs(y(i)) <= cfg.tau) pos.active_set.push_back(static_cast<std::size_t>(i));
    }
  } else {
    pos.where = Position::outside;
  }
  return pos;
}

OrderUnit::OrderUnit(const ConeSpec& k, Vec e, const Config& cfg) : e_(std::move(e)) {
  require_finite(e_, "order unit");
  if (boundary_position(k, e_, cfg).where != Position::interior) {
    throw Error(ErrorCode::precondition, "order unit is not an interior point of the cone");
  }
}

double order_unit_norm(const ConeSpec& k, const OrderUnit& e, const Vec& x) {
  const Vec y = k.to_orthant(x);
  const Vec f = k.to_orthant(e.vec());
  return (y.cwiseAbs().array() / f.array()).maxCoeff();
}

bool is_quasi_interior(const ConeSpec& k, const Vec& z, const Config& cfg) {
  return boundary_position(k, z, cfg).where == Position::interior;
}

double dual_pairing(const Vec& phi, const Vec& x) {
  require_dim(static_cast<std::size_t>(phi.size()), static_cast<std::size_t>(x.size()),
              "dual pairing");
  return phi.dot(x);
}

NormIdentity operator_norm_identity_check(const ConeSpec& kx, const OrderUnit& e,
                                          const ConeSpec& ky, const OrderUnit& eps,
                                          const Mat& b, const Config& cfg) {
  const std::size_t n = kx.dim();
  if (n > cfg.norm_max_dim) {
    throw Error(ErrorCode::guard_exceeded,
                "order-interval enumeration guard: n = " + std::to_string(n) + " > " +
                    std::to_string(cfg.norm_max_dim));
  }
  if (!is_cone_positive(b, kx, ky, cfg).holds) {
    throw Error(ErrorCode::precondition,
                "operator is not cone-positive; the norm identity is not claimed");
  }

  // Vertices of [-e, e] are G diag(s) f for sign patterns s; s and -s give
  // the same norm, so the last sign is pinned to +1.
  const Vec f = kx.to_orthant(e.vec());
  const Mat bg = b * kx.generators();
  const std::size_t patterns = std::size_t{1} << (n - 1);
  double best = 0.0;
  Vec y(static_cast<Eigen::Index>(n));
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      const bool negative = i + 1 < n && ((mask >> i) & 1U);
      y(static_cast<Eigen::Index>(i)) = negative ? -f(static_cast<Eigen::Index>(i))
                                                 : f(static_cast<Eigen::Index>(i));
    }
    best = std::max(best, order_unit_norm(ky, eps, bg * y));
  }

  NormIdentity out;
  out.norm = best;
  out.norm_of_be = order_unit_norm(ky, eps, b * e.vec());
  out.agree = std::abs(out.norm - out.norm_of_be) <= cfg.tau_rel * out.norm;
  return out;
}

}  // namespace conekit
