#include "conekit/invpos.hpp"

#include "conekit/error.hpp"
#include "conekit/lpkernel.hpp"

#include <algorithm>
#include <cmath>

namespace conekit {

namespace {

using Index = Eigen::Index;

void require_segment_ends(const ConeSpec& k, const Vec& x, const Vec& e, const Config& cfg) {
  if (boundary_position(k, x, cfg).where != Position::outside) {
    throw Error(ErrorCode::precondition, "borderline: x is already in the cone");
  }
  if (boundary_position(k, e, cfg).where != Position::interior) {
    throw Error(ErrorCode::precondition, "borderline: e is not an interior point");
  }
}

Borderline at_parameter(const ConeSpec& k, const Vec& x, const Vec& e, double t,
                        const Config& cfg) {
  Borderline b;
  b.t_b = t;
  b.point = (1.0 - t) * x + t * e;
  b.active_set = boundary_position(k, b.point, cfg).active_set;
  return b;
}

}  // namespace

Borderline borderline(const ConeSpec& k, const Vec& x, const Vec& e, const Config& cfg) {
  require_segment_ends(k, x, e, cfg);
  const Vec y = k.to_orthant(x);
  const Vec f = k.to_orthant(e);
  double t = 0.0;
  Index crossing = 0;
  for (Index i = 0; i < y.size(); ++i) {
    if (y(i) < 0.0) {
      const double ti = y(i) / (y(i) - f(i));
      if (ti > t) {
        t = ti;
        crossing = i;
      }
    }
  }
  Borderline b = at_parameter(k, x, e, t, cfg);
  // The crossing coordinate is exactly zero in exact arithmetic.
  if (std::find(b.active_set.begin(), b.active_set.end(), static_cast<std::size_t>(crossing)) ==
      b.active_set.end()) {
    b.active_set.push_back(static_cast<std::size_t>(crossing));
    std::sort(b.active_set.begin(), b.active_set.end());
  }
  return b;
}

Borderline borderline_bisect(const ConeSpec& k, const Vec& x, const Vec& e, const Config& cfg,
                             int max_iterations) {
  require_segment_ends(k, x, e, cfg);
  const Vec y = k.to_orthant(x);
  const Vec f = k.to_orthant(e);
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < max_iterations && hi - lo > cfg.tau; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (((1.0 - mid) * y + mid * f).minCoeff() >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return at_parameter(k, x, e, hi, cfg);
}

std::optional<Vec> find_inverse_positivity_counterexample(const Mat& a, const ConeSpec& kx,
                                                          const ConeSpec& ky,
                                                          const Config& cfg) {
  const Mat at = conjugate(a, kx, ky);
  const Index n = at.cols();
  for (Index i = 0; i < n; ++i) {
    LinProgram lp(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) lp.set_free(static_cast<std::size_t>(j));
    for (Index r = 0; r < at.rows(); ++r) lp.add_le(at.row(r).transpose(), 0.0);
    Vec pin = Vec::Zero(n);
    pin(i) = 1.0;
    lp.add_le(std::move(pin), -1.0);
    const auto out = solve(lp, cfg);
    if (out.has_point()) return kx.from_orthant(out.point);
  }
  return std::nullopt;
}

Theorem1Report theorem1_verify(const Mat& a, const ConeSpec& kx, const ConeSpec& ky,
                               const Vec& z, const Config& cfg, const std::optional<Vec>& e) {
  require_finite(a, "matrix");
  require_finite(z, "z");
  require_dim(static_cast<std::size_t>(a.cols()), kx.dim(), "matrix columns vs domain cone");
  require_dim(static_cast<std::size_t>(a.rows()), ky.dim(), "matrix rows vs codomain cone");
  require_dim(static_cast<std::size_t>(z.size()), ky.dim(), "z");

  Theorem1Report rep;
  auto& h = rep.hypotheses;
  h.z = z;
  h.z_quasi_interior = is_quasi_interior(ky, z, cfg);

  const auto sv = singular_value_range(a);
  if (e) {
    require_dim(static_cast<std::size_t>(e->size()), kx.dim(), "e");
    h.e = *e;
    h.note = "solution supplied";
  } else if (a.rows() == a.cols() && !sv.rank_deficient(cfg.tau_rank)) {
    h.e = a.partialPivLu().solve(-z);
    h.note = "LU with partial pivoting";
  } else {
    h.e = a.completeOrthogonalDecomposition().solve(-z);
    h.note = "matrix is singular or rectangular; minimum-norm least-squares solution";
  }
  h.residual = (a * h.e + z).norm();
  h.solvable = h.e.allFinite() && h.residual <= cfg.tau_res * std::max(1.0, z.norm());
  h.e_interior = h.e.allFinite() && boundary_position(kx, h.e, cfg).where == Position::interior;
  h.somewhere_positive = is_somewhere_positive(a, kx, ky, cfg).verdict;

  if (!h.all_hold()) return rep;

  Theorem1Conclusions c;
  c.sigma_min = sv.min;
  c.sigma_max = sv.max;
  c.kernel_trivial = !sv.rank_deficient(cfg.tau_rank);
  c.inverse_exists = c.kernel_trivial && a.rows() == a.cols();
  std::vector<std::string> failures;
  if (c.inverse_exists) {
    Mat neg_inverse = -a.partialPivLu().inverse();
    const auto pos = is_cone_positive(neg_inverse, ky, kx, cfg);
    c.neg_inverse_positive = pos.holds ? Verdict::yes : Verdict::no;
    c.neg_inverse_min_entry = pos.min_entry;
    c.neg_inverse = std::move(neg_inverse);
    if (!pos.holds) failures.emplace_back("-A^{-1} is not cone-positive");
  }
  if (!c.kernel_trivial) failures.emplace_back("kernel is not trivial");
  c.inverse_positivity_counterexample = find_inverse_positivity_counterexample(a, kx, ky, cfg);
  if (c.inverse_positivity_counterexample) {
    failures.emplace_back("found x outside the cone with A x <= 0");
  }
  rep.conclusions = std::move(c);

  if (!failures.empty()) {
    std::string msg = "hypotheses hold but:";
    for (const auto& f : failures) msg += " " + f + ";";
    rep.violation = std::move(msg);
  }
  return rep;
}

Refutation refute_counterexample(const Mat& a, const ConeSpec& kx, const ConeSpec& ky,
                                 const Vec& e, const Vec& x, const Config& cfg) {
  require_finite(a, "matrix");
  const Vec z = -(a * e);
  if (!is_quasi_interior(ky, z, cfg)) {
    throw Error(ErrorCode::precondition, "z = -A e is not quasi-interior");
  }
  const Vec ax = a * x;
  if (!contains(ky, -ax, cfg)) {
    throw Error(ErrorCode::precondition, "claimed counterexample does not satisfy A x <= 0");
  }
  const Borderline b = borderline(kx, x, e, cfg);

  const Vec image = a * b.point;
  const Vec w = ky.to_orthant(image);
  Index best = 0;
  w.maxCoeff(&best);
  if (w(best) < -cfg.tau) {
    return NotSomewherePositiveAt{b.t_b, b.point, image};
  }

  // Dual extreme ray: row `best` of G_Y^{-1} in the original pairing.
  PathCertificate cert;
  cert.x = x;
  cert.e = e;
  cert.t_b = b.t_b;
  cert.x_tb = b.point;
  cert.active_set = b.active_set;
  cert.psi = ky.inverse_generators().row(best).transpose();
  cert.pairing_value = cert.psi.dot(image);
  const double psi_ax = cert.psi.dot(ax);
  const double psi_z = cert.psi.dot(z);
  cert.display_value = (1.0 - b.t_b) * psi_ax - b.t_b * psi_z;
  cert.identity_residual =
      std::abs(cert.pairing_value - ((1.0 - b.t_b) * psi_ax + b.t_b * cert.psi.dot(a * e)));
  cert.contradiction = cert.pairing_value >= -cfg.tau && cert.display_value < 0.0;
  return cert;
}

}  // namespace conekit
