#pragma once

#include "conekit/config.hpp"
#include "conekit/linalg.hpp"

#include <cstddef>
#include <vector>

namespace conekit {

enum class ConeKind { orthant, simplicial };

/// A closed proper cone with non-empty interior in R^n: either the standard
/// orthant or K = G * R^n_+ for an invertible generator matrix G.
///
/// Every query is answered in orthant coordinates y = G^{-1} x, where the
/// cone is the orthant, its facets are {y_i = 0} and its dual cone is spanned
/// by the rows of G^{-1}.
class ConeSpec {
 public:
  static ConeSpec orthant(std::size_t n);

  /// Throws Error(singular) when sigma_min(G) <= cfg.tau_sing * ||G||_2.
  static ConeSpec simplicial(Mat generators, const Config& cfg = {});

  std::size_t dim() const { return dim_; }
  ConeKind kind() const { return kind_; }

  /// Identity for the orthant.
  const Mat& generators() const { return generators_; }
  const Mat& inverse_generators() const { return inverse_; }
  double condition_number() const { return condition_; }

  Vec to_orthant(const Vec& x) const;
  Vec from_orthant(const Vec& y) const;

  /// G * 1, the canonical order unit.
  Vec unit() const;

 private:
  ConeSpec() = default;

  std::size_t dim_ = 0;
  ConeKind kind_ = ConeKind::orthant;
  Mat generators_;
  Mat inverse_;
  double condition_ = 1.0;
};

/// G_Y^{-1} A G_X: the matrix of A in orthant coordinates of both cones.
Mat conjugate(const Mat& a, const ConeSpec& domain, const ConeSpec& codomain);

/// True iff x is in K up to cfg.tau (in orthant coordinates).
bool contains(const ConeSpec& k, const Vec& x, const Config& cfg = {});

enum class Position { interior, boundary, outside };

struct BoundaryPosition {
  Position where = Position::outside;
  std::vector<std::size_t> active_set;  ///< {i : |y_i| <= tau}, boundary only
  double min_coordinate = 0.0;          ///< min_i y_i, the interior margin
};

BoundaryPosition boundary_position(const ConeSpec& k, const Vec& x, const Config& cfg = {});

/// An interior point of a cone, validated at construction.
class OrderUnit {
 public:
  /// Throws Error(precondition) when e is not interior.
  OrderUnit(const ConeSpec& k, Vec e, const Config& cfg = {});

  const Vec& vec() const { return e_; }

 private:
  Vec e_;
};

/// ||x||_e = inf{l > 0 : -l e <= x <= l e} = max_i |y_i| / f_i with
/// y = G^{-1} x and f = G^{-1} e.
double order_unit_norm(const ConeSpec& k, const OrderUnit& e, const Vec& x);

/// Quasi-interior coincides with interior for these cones.
bool is_quasi_interior(const ConeSpec& k, const Vec& z, const Config& cfg = {});

double dual_pairing(const Vec& phi, const Vec& x);

struct NormIdentity {
  double norm = 0.0;        ///< sup over ||x||_e <= 1 of ||B x||_eps
  double norm_of_be = 0.0;  ///< ||B e||_eps
  bool agree = false;
};

/// Operator norm of a cone-positive B : (R^n, K_X, e) -> (R^m, K_Y, eps),
/// computed by enumerating the 2^n vertices of the order interval [-e, e],
/// compared against ||B e||_eps. Throws Error(precondition) if B is not
/// cone-positive and Error(guard_exceeded) when n > cfg.norm_max_dim.
NormIdentity operator_norm_identity_check(const ConeSpec& kx, const OrderUnit& e,
                                          const ConeSpec& ky, const OrderUnit& eps,
                                          const Mat& b, const Config& cfg = {});

}  // namespace conekit
