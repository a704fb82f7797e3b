#pragma once

#include "conekit/classify.hpp"
#include "conekit/cone.hpp"
#include "conekit/config.hpp"
#include "conekit/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace conekit {

struct ExpmResult {
  Mat value;
  int scaling_squarings = 0;
  int series_terms = 0;
};

/// e^{tA} by scaling and squaring: the smallest s with ||tA||_inf / 2^s <= 1/2,
/// a 20-term Taylor series on the scaled matrix, then s squarings.
/// Throws Error(numeric) on overflow.
ExpmResult expm(const Mat& a, double t);

/// 20 log-spaced points in [1e-3, 10].
std::vector<double> default_time_grid();

struct SampledVerdict {
  bool holds = false;
  std::optional<double> first_failure;  ///< t (or lambda) of the first failure
  double min_entry = 0.0;               ///< worst orthant-coordinate entry seen
};

/// e^{tA} is cone-positive at every t of the grid.
SampledVerdict positivity_of_semigroup(const Mat& a, const ConeSpec& k,
                                       const std::vector<double>& t_grid, const Config& cfg = {});

/// lambda0 = ||A e||_e.
double lambda_threshold(const Mat& a, const ConeSpec& k, const OrderUnit& e);

struct ShiftedUnit {
  double lambda = 0.0;
  double epsilon = 0.0;  ///< lambda - lambda0
  Vec z;                 ///< -(A - lambda I) e
  bool dominates = false;  ///< z >= epsilon e in the cone order
};

/// For lambda > lambda0, z = -(A - lambda I) e dominates epsilon e.
/// Throws Error(precondition) when lambda <= lambda0.
ShiftedUnit shifted_unit(const Mat& a, const ConeSpec& k, const OrderUnit& e, double lambda,
                         const Config& cfg = {});

/// Cone-positivity of the normalized resolvent lambda (lambda I - A)^{-1}
/// (the same cone as (lambda I - A)^{-1}; the scaling keeps tau meaningful
/// for large lambda). Throws Error(singular) when lambda is numerically in
/// the spectrum.
PositivityCheck resolvent_positive(const Mat& a, const ConeSpec& k, double lambda,
                                   const Config& cfg = {});

/// (I - (t/n) A)^{-n} via n solves against one LU factorization.
/// Throws Error(singular) when the step matrix is singular.
Mat hille_yosida_approx(const Mat& a, double t, std::size_t n, const Config& cfg = {});

struct ContractionReport {
  double lambda0 = 0.0;
  double sup_unit_norm = 0.0;        ///< sup_t ||e^{t(A - lambda0 I)} e||_e
  double sup_operator_norm = 0.0;    ///< same, by order-interval enumeration
  double max_rescaling_error = 0.0;  ///< relative ||e^{tA} - e^{t lambda0} e^{t(A - lambda0 I)}||
  bool contraction_holds = false;
  bool rescaling_holds = false;
};

/// Requires A cross-positive (Error(precondition) otherwise).
ContractionReport contraction_rescaling_check(const Mat& a, const ConeSpec& k, const OrderUnit& e,
                                              const std::vector<double>& t_grid,
                                              const Config& cfg = {});

/// lambda0 + 1, 2 lambda0 + 2, 10 lambda0 + 10, then 1e2, 1e3, 1e4 times (lambda0 + 1).
std::vector<double> lambda_grid(double lambda0);

struct HillePoint {
  std::size_t steps = 0;
  double alpha = 0.0;  ///< t / n
  double error = 0.0;  ///< ||(I - (t/n)A)^{-n} - e^{tA}||_inf
  bool cone_positive = false;
};

struct SemigroupReport {
  double lambda0 = 0.0;
  Verdict cond_i_sampled = Verdict::unknown;
  Verdict cond_ii = Verdict::unknown;
  Verdict cond_iii = Verdict::unknown;
  Verdict cond_iv = Verdict::unknown;
  std::optional<double> cond_i_first_failure;
  std::optional<double> cond_iv_first_failure;
  std::vector<double> lambdas_used;
  std::vector<HillePoint> hy_convergence;  ///< t = 1, n = 1, 2, 4, ..., 256
  double contraction_check = 0.0;          ///< sup_t ||e^{t(A - lambda0 I)} e||_e
  bool agreement = false;
  std::vector<std::string> events;
  std::optional<std::string> violation;
};

/// Evaluates conditions (i) sampled, (ii), (iii) and (iv) on the lambda grid
/// and checks they agree; a disagreement is recorded as a violation.
/// Uses e = G 1. An unknown (iii) is left out of the agreement check.
SemigroupReport theorem2_harness(const Mat& a, const ConeSpec& k, const Config& cfg = {});

}  // namespace conekit
