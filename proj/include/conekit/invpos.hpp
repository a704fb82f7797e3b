#pragma once

#include "conekit/classify.hpp"
#include "conekit/cone.hpp"
#include "conekit/config.hpp"
#include "conekit/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conekit {

/// First point of the segment x_t = (1 - t) x + t e that enters the cone.
struct Borderline {
  double t_b = 0.0;
  Vec point;  ///< x_{t_b}
  std::vector<std::size_t> active_set;
};

/// Closed form in orthant coordinates: t_b = max_{y_i < 0} y_i / (y_i - f_i)
/// with y = G^{-1} x, f = G^{-1} e. Requires x outside and e interior
/// (Error(precondition) otherwise).
Borderline borderline(const ConeSpec& k, const Vec& x, const Vec& e, const Config& cfg = {});

/// Bisection on t for cross-checking the closed form.
Borderline borderline_bisect(const ConeSpec& k, const Vec& x, const Vec& e,
                             const Config& cfg = {}, int max_iterations = 200);

struct Theorem1Hypotheses {
  Verdict somewhere_positive = Verdict::unknown;
  Vec e;
  Vec z;
  bool e_interior = false;
  bool z_quasi_interior = false;
  bool solvable = false;  ///< residual within tau_res * max(1, ||z||)
  double residual = 0.0;  ///< ||A e + z||_2
  std::string note;

  bool all_hold() const {
    return somewhere_positive == Verdict::yes && z_quasi_interior && solvable && e_interior;
  }
};

struct Theorem1Conclusions {
  bool kernel_trivial = false;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  bool inverse_exists = false;
  Verdict neg_inverse_positive = Verdict::unknown;
  double neg_inverse_min_entry = 0.0;  ///< in orthant coordinates
  std::optional<Mat> neg_inverse;
  /// x with A x <= 0 and x outside the cone, if the LP search found one.
  std::optional<Vec> inverse_positivity_counterexample;
};

struct Theorem1Report {
  Theorem1Hypotheses hypotheses;
  std::optional<Theorem1Conclusions> conclusions;  ///< only when hypotheses hold
  std::optional<std::string> violation;            ///< THEOREM VIOLATION detail
};

/// Solves A e = -z (LU when square and nonsingular, otherwise the
/// minimum-norm least-squares solution; `e` may be supplied instead), checks
/// the hypotheses, and when all hold verifies the conclusions: trivial
/// kernel, -A^{-1} cone-positive, and no LP counterexample to inverse
/// positivity. A failing conclusion is recorded as a violation.
Theorem1Report theorem1_verify(const Mat& a, const ConeSpec& kx, const ConeSpec& ky,
                               const Vec& z, const Config& cfg = {},
                               const std::optional<Vec>& e = std::nullopt);

/// Searches for x with A x <= 0 (in K_Y) and x outside K_X: for each
/// orthant coordinate i, LP feasibility of {A~ y <= 0, y_i <= -1} over free y.
std::optional<Vec> find_inverse_positivity_counterexample(const Mat& a, const ConeSpec& kx,
                                                          const ConeSpec& ky,
                                                          const Config& cfg = {});

/// The contradiction of the inverse-positivity argument, evaluated.
struct PathCertificate {
  Vec x;
  Vec e;
  double t_b = 0.0;
  Vec x_tb;
  std::vector<std::size_t> active_set;
  Vec psi;                       ///< dual-cone functional with <psi, A x_tb> >= 0
  double pairing_value = 0.0;    ///< <psi, A x_tb>
  double display_value = 0.0;    ///< (1 - t_b) <psi, A x> - t_b <psi, z>
  double identity_residual = 0.0;
  bool contradiction = false;    ///< pairing >= -tau while display < 0
};

/// No dual functional is non-negative on A x_tb: A is not somewhere positive there.
struct NotSomewherePositiveAt {
  double t_b = 0.0;
  Vec x_tb;
  Vec image;  ///< A x_tb, strictly negative in K_Y's orthant coordinates
};

using Refutation = std::variant<PathCertificate, NotSomewherePositiveAt>;

/// Given e interior with z = -A e quasi-interior and a claimed x outside the
/// cone with A x <= 0, walks the segment to its borderline point and either
/// exhibits the numeric contradiction or shows A fails somewhere positivity
/// at x_tb. Violated preconditions throw Error(precondition).
Refutation refute_counterexample(const Mat& a, const ConeSpec& kx, const ConeSpec& ky,
                                 const Vec& e, const Vec& x, const Config& cfg = {});

}  // namespace conekit
