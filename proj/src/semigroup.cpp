#include "conekit/semigroup.hpp"

#include "conekit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conekit {

namespace {

constexpr int kSeriesTerms = 20;
constexpr int kMaxSquarings = 1100;

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

ExpmResult expm(const Mat& a, double t) {
  require_square(a, "matrix");
  require_finite(a, "matrix");
  if (!std::isfinite(t)) throw Error(ErrorCode::invalid_argument, "expm: t is not finite");
  const Eigen::Index n = a.rows();
  Mat m = t * a;
  const double norm = inf_norm(m);
  if (!std::isfinite(norm)) throw Error(ErrorCode::numeric, "expm: ||tA|| overflows");
  int s = 0;
  while (std::ldexp(norm, -s) > 0.5) {
    if (++s > kMaxSquarings) throw Error(ErrorCode::numeric, "expm: ||tA|| overflows");
  }
  m = m.unaryExpr([s](double v) { return std::ldexp(v, -s); });

  Mat result = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int k = 1; k <= kSeriesTerms; ++k) {
    term = (term * m) / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  if (!result.allFinite()) throw Error(ErrorCode::numeric, "expm: result overflowed");
  return {std::move(result), s, kSeriesTerms};
}

std::vector<double> default_time_grid() {
  std::vector<double> grid;
  for (int k = 0; k < 20; ++k) grid.push_back(std::pow(10.0, -3.0 + 4.0 * k / 19.0));
  return grid;
}

SampledVerdict positivity_of_semigroup(const Mat& a, const ConeSpec& k,
                                       const std::vector<double>& t_grid, const Config& cfg) {
  SampledVerdict v;
  v.holds = true;
  v.min_entry = std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const auto check = is_cone_positive(expm(a, t).value, k, k, cfg);
    v.min_entry = std::min(v.min_entry, check.min_entry);
    if (!check.holds) {
      v.holds = false;
      v.first_failure = t;
      break;
    }
  }
  if (t_grid.empty()) v.min_entry = 0.0;
  return v;
}

double lambda_threshold(const Mat& a, const ConeSpec& k, const OrderUnit& e) {
  require_square(a, "matrix");
  return order_unit_norm(k, e, a * e.vec());
}

ShiftedUnit shifted_unit(const Mat& a, const ConeSpec& k, const OrderUnit& e, double lambda,
                         const Config& cfg) {
  const double lambda0 = lambda_threshold(a, k, e);
  if (!(lambda > lambda0)) {
    throw Error(ErrorCode::precondition, "shifted_unit: lambda must exceed ||A e||_e");
  }
  ShiftedUnit s;
  s.lambda = lambda;
  s.epsilon = lambda - lambda0;
  s.z = lambda * e.vec() - a * e.vec();
  s.dominates = contains(k, s.z - s.epsilon * e.vec(), cfg);
  return s;
}

PositivityCheck resolvent_positive(const Mat& a, const ConeSpec& k, double lambda,
                                   const Config& cfg) {
  require_square(a, "matrix");
  const Mat m = lambda * Mat::Identity(a.rows(), a.cols()) - a;
  if (singular_value_range(m).rank_deficient(cfg.tau_rank)) {
    throw Error(ErrorCode::singular, "lambda = " + std::to_string(lambda) + " is in the spectrum");
  }
  const Mat normalized = lambda * m.partialPivLu().inverse();
  return is_cone_positive(normalized, k, k, cfg);
}

Mat hille_yosida_approx(const Mat& a, double t, std::size_t n, const Config& cfg) {
  require_square(a, "matrix");
  const Eigen::Index dim = a.rows();
  Mat x = Mat::Identity(dim, dim);
  if (n == 0) return x;
  const Mat step = x - (t / static_cast<double>(n)) * a;
  if (singular_value_range(step).rank_deficient(cfg.tau_rank)) {
    throw Error(ErrorCode::singular, "I - (t/n) A is singular");
  }
  const auto lu = step.partialPivLu();
  for (std::size_t k = 0; k < n; ++k) x = lu.solve(x);
  return x;
}

ContractionReport contraction_rescaling_check(const Mat& a, const ConeSpec& k, const OrderUnit& e,
                                              const std::vector<double>& t_grid,
                                              const Config& cfg) {
  if (is_positive_off_diagonal(a, k, cfg).verdict != Verdict::yes) {
    throw Error(ErrorCode::precondition,
                "contraction check requires a cross-positive generator");
  }
  ContractionReport r;
  r.lambda0 = lambda_threshold(a, k, e);
  const Mat shifted = shift(a, r.lambda0);
  const bool enumerate = k.dim() <= cfg.norm_max_dim;
  for (double t : t_grid) {
    const Mat s = expm(shifted, t).value;
    r.sup_unit_norm = std::max(r.sup_unit_norm, order_unit_norm(k, e, s * e.vec()));
    if (enumerate) {
      r.sup_operator_norm =
          std::max(r.sup_operator_norm, operator_norm_identity_check(k, e, k, e, s, cfg).norm);
    }
    const Mat direct = expm(a, t).value;
    const Mat rescaled = std::exp(t * r.lambda0) * s;
    const double err = max_abs(direct - rescaled) / std::max(1.0, max_abs(direct));
    r.max_rescaling_error = std::max(r.max_rescaling_error, err);
  }
  r.contraction_holds = r.sup_unit_norm <= 1.0 + cfg.tau;
  r.rescaling_holds = r.max_rescaling_error <= cfg.tau_expm;
  return r;
}

std::vector<double> lambda_grid(double lambda0) {
  const double base = lambda0 + 1.0;
  return {base, 2.0 * base, 10.0 * base, 1e2 * base, 1e3 * base, 1e4 * base};
}

SemigroupReport theorem2_harness(const Mat& a, const ConeSpec& k, const Config& cfg) {
  require_square(a, "matrix");
  require_finite(a, "matrix");
  require_dim(static_cast<std::size_t>(a.rows()), k.dim(), "matrix vs cone");
  SemigroupReport r;
  const OrderUnit e(k, k.unit(), cfg);
  r.lambda0 = lambda_threshold(a, k, e);

  r.cond_ii = is_positive_off_diagonal(a, k, cfg).verdict;
  r.cond_iii = is_somewhere_positive_off_diagonal(a, k, cfg).verdict;
  if (r.cond_iii == Verdict::unknown) {
    r.events.emplace_back("condition (iii) undecided: dimension above the face-sweep cap");
  }

  r.cond_iv = Verdict::yes;
  for (double lambda : lambda_grid(r.lambda0)) {
    PositivityCheck check;
    for (int attempt = 0;; ++attempt) {
      try {
        check = resolvent_positive(a, k, lambda, cfg);
        break;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::singular || attempt >= 8) throw;
        r.events.push_back("lambda = " + std::to_string(lambda) +
                           " hit the spectrum; perturbed by +1");
        lambda += 1.0;
      }
    }
    r.lambdas_used.push_back(lambda);
    if (!check.holds) {
      r.cond_iv = Verdict::no;
      r.cond_iv_first_failure = lambda;
      break;
    }
  }

  const auto sampled = positivity_of_semigroup(a, k, default_time_grid(), cfg);
  r.cond_i_sampled = sampled.holds ? Verdict::yes : Verdict::no;
  r.cond_i_first_failure = sampled.first_failure;

  const Mat reference = expm(a, 1.0).value;
  for (std::size_t n = 1; n <= 256; n *= 2) {
    HillePoint p;
    p.steps = n;
    p.alpha = 1.0 / static_cast<double>(n);
    try {
      const Mat approx = hille_yosida_approx(a, 1.0, n, cfg);
      p.error = inf_norm(approx - reference);
      p.cone_positive = is_cone_positive(approx, k, k, cfg).holds;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::singular) throw;
      p.error = std::numeric_limits<double>::infinity();
      r.events.push_back("Hille-Yosida step with n = " + std::to_string(n) + " is singular");
    }
    r.hy_convergence.push_back(p);
  }

  const Mat shifted = shift(a, r.lambda0);
  for (double t : default_time_grid()) {
    r.contraction_check = std::max(
        r.contraction_check, order_unit_norm(k, e, expm(shifted, t).value * e.vec()));
  }

  std::vector<std::pair<const char*, Verdict>> decided = {
      {"(i) sampled", r.cond_i_sampled}, {"(ii)", r.cond_ii}, {"(iv)", r.cond_iv}};
  if (r.cond_iii != Verdict::unknown) decided.emplace_back("(iii)", r.cond_iii);
  r.agreement = std::all_of(decided.begin(), decided.end(),
                            [&](const auto& d) { return d.second == decided.front().second; });
  if (!r.agreement) {
    std::string msg = "conditions disagree:";
    for (const auto& [name, v] : decided) msg += std::string(" ") + name + "=" + to_string(v);
    r.violation = std::move(msg);
  }
  if (r.cond_ii == Verdict::yes && r.contraction_check > 1.0 + cfg.tau) {
    r.violation = (r.violation ? *r.violation + "; " : std::string()) +
                  "shifted semigroup is not contractive on the order unit";
  }
  return r;
}

}  // namespace conekit
