#include "conekit/lpkernel.hpp"

#include "conekit/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace conekit {

LinProgram::LinProgram(std::size_t num_vars)
    : objective(Vec::Zero(static_cast<Eigen::Index>(num_vars))), lower_bounds(num_vars, 0.0) {}

void LinProgram::add_equality(Vec row, double rhs) {
  require_dim(static_cast<std::size_t>(row.size()), num_vars(), "LP equality row");
  equalities.push_back({std::move(row), rhs});
}

void LinProgram::add_ge(Vec row, double rhs) {
  require_dim(static_cast<std::size_t>(row.size()), num_vars(), "LP inequality row");
  inequalities_ge.push_back({std::move(row), rhs});
}

void LinProgram::add_le(Vec row, double rhs) { add_ge(-row, -rhs); }

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;

double row_scale(const LinearRow& r, const Vec& x) {
  return std::max({1.0, std::abs(r.rhs), r.row.cwiseProduct(x).cwiseAbs().sum()});
}

// Standard form: columns are shifted/split user variables followed by surplus
// and artificial columns; every row has rhs >= 0 and one artificial.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  // Row `rows_` is the reduced-cost row.
  double& cost(std::size_t c) { return at(rows_, c); }
  double value() const { return at(rows_, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
  }

  void drop_row(std::size_t r) {
    // Swap with the last constraint row, then shift the cost row up.
    const std::size_t w = cols_ + 1;
    if (r != rows_ - 1) {
      std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(r * w),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * w),
                       data_.begin() + static_cast<std::ptrdiff_t>((rows_ - 1) * w));
    }
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(rows_ * w),
              data_.begin() + static_cast<std::ptrdiff_t>((rows_ + 1) * w),
              data_.begin() + static_cast<std::ptrdiff_t>((rows_ - 1) * w));
    --rows_;
    data_.resize((rows_ + 1) * w);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

enum class PhaseResult { optimal, unbounded };

class Simplex {
 public:
  Simplex(Tableau& t, std::vector<std::size_t>& basis, std::size_t cap)
      : t_(t), basis_(basis), cap_(cap) {}

  // Maximizes c . u given reduced costs already priced for the basis.
  // Columns with allowed[c] == false never enter.
  PhaseResult run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = t_.cols();
      for (std::size_t c = 0; c < t_.cols(); ++c) {
        if (allowed[c] && t_.cost(c) < -kCostEps) {
          enter = c;
          break;
        }
      }
      if (enter == t_.cols()) return PhaseResult::optimal;

      std::size_t leave = t_.rows();
      double best = 0.0;
      for (std::size_t r = 0; r < t_.rows(); ++r) {
        const double a = t_.at(r, enter);
        if (a <= kPivotEps) continue;
        const double ratio = t_.rhs(r) / a;
        if (leave == t_.rows() || ratio < best - 1e-12 ||
            (ratio <= best + 1e-12 && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == t_.rows()) return PhaseResult::unbounded;

      if (++iterations_ > cap_) {
        throw Error(ErrorCode::numeric,
                    "simplex iteration cap " + std::to_string(cap_) + " exceeded");
      }
      t_.pivot(leave, enter);
      basis_[leave] = enter;
    }
  }

  std::size_t iterations() const { return iterations_; }

 private:
  Tableau& t_;
  std::vector<std::size_t>& basis_;
  std::size_t cap_;
  std::size_t iterations_ = 0;
};

void price(Tableau& t, const std::vector<std::size_t>& basis, const std::vector<double>& c) {
  // cost row = c_B B^{-1} A - c, value = c_B B^{-1} b
  for (std::size_t j = 0; j <= t.cols(); ++j) {
    double s = j < t.cols() ? -c[j] : 0.0;
    for (std::size_t r = 0; r < t.rows(); ++r) s += c[basis[r]] * t.at(r, j);
    t.at(t.rows(), j) = s;
  }
}

}  // namespace

LpOutcome solve(const LinProgram& p, const Config& cfg) {
  const std::size_t n = p.num_vars();
  if (n > cfg.lp_max_vars) {
    throw Error(ErrorCode::guard_exceeded, "LP guard: " + std::to_string(n) + " variables > " +
                                               std::to_string(cfg.lp_max_vars));
  }
  require_finite(p.objective, "LP objective");
  for (const auto& r : p.equalities) require_finite(r.row, "LP equality row");
  for (const auto& r : p.inequalities_ge) require_finite(r.row, "LP inequality row");

  // Map user variable j to one column (x = lb + u) or two (x = u+ - u-).
  std::vector<std::size_t> first_col(n);
  std::vector<bool> split(n);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    first_col[j] = ncols;
    split[j] = !std::isfinite(p.lower_bounds[j]);
    ncols += split[j] ? 2 : 1;
  }
  const std::size_t user_cols = ncols;
  const std::size_t neq = p.equalities.size();
  const std::size_t nge = p.inequalities_ge.size();
  const std::size_t rows = neq + nge;
  const std::size_t surplus0 = user_cols;
  const std::size_t art0 = surplus0 + nge;
  const std::size_t total = art0 + rows;

  Tableau t(rows, total);
  auto fill_row = [&](std::size_t r, const LinearRow& lr) {
    double rhs = lr.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const double a = lr.row(static_cast<Eigen::Index>(j));
      if (split[j]) {
        t.at(r, first_col[j]) = a;
        t.at(r, first_col[j] + 1) = -a;
      } else {
        t.at(r, first_col[j]) = a;
        rhs -= a * p.lower_bounds[j];
      }
    }
    t.rhs(r) = rhs;
  };
  for (std::size_t i = 0; i < neq; ++i) fill_row(i, p.equalities[i]);
  for (std::size_t i = 0; i < nge; ++i) {
    fill_row(neq + i, p.inequalities_ge[i]);
    t.at(neq + i, surplus0 + i) = -1.0;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (t.rhs(r) < 0.0) {
      for (std::size_t c = 0; c <= total; ++c) t.at(r, c) = -t.at(r, c);
    }
    t.at(r, art0 + r) = 1.0;
  }

  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = art0 + r;
  const std::size_t cap = 10 * (total + rows) * (total + rows);
  Simplex simplex(t, basis, cap);

  LpOutcome out;
  double bscale = 1.0;
  for (std::size_t r = 0; r < rows; ++r) bscale = std::max(bscale, std::abs(t.rhs(r)));

  // Phase 1: maximize -sum(artificials).
  std::vector<double> c1(total, 0.0);
  for (std::size_t r = 0; r < rows; ++r) c1[art0 + r] = -1.0;
  price(t, basis, c1);
  std::vector<bool> allowed(total, true);
  simplex.run(allowed);
  out.phase1_residual = -t.value();
  if (out.phase1_residual > cfg.tau_lp * bscale) {
    out.status = LpStatus::infeasible;
    out.iterations = simplex.iterations();
    return out;
  }

  // Drive remaining artificials out of the basis; redundant rows are dropped.
  for (std::size_t r = 0; r < t.rows();) {
    if (basis[r] < art0) {
      ++r;
      continue;
    }
    std::size_t col = total;
    double best = 1e-9;
    for (std::size_t c = 0; c < art0; ++c) {
      if (std::abs(t.at(r, c)) > best) {
        best = std::abs(t.at(r, c));
        col = c;
      }
    }
    if (col == total) {
      t.drop_row(r);
      basis[r] = basis.back();
      basis.pop_back();
      continue;
    }
    t.pivot(r, col);
    basis[r] = col;
    ++r;
  }

  // Phase 2 on user + surplus columns.
  std::vector<double> c2(total, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double cj = p.objective(static_cast<Eigen::Index>(j));
    c2[first_col[j]] = cj;
    if (split[j]) c2[first_col[j] + 1] = -cj;
  }
  for (std::size_t c = art0; c < total; ++c) allowed[c] = false;
  price(t, basis, c2);
  const PhaseResult phase2 = simplex.run(allowed);
  out.iterations = simplex.iterations();
  if (phase2 == PhaseResult::unbounded) {
    out.status = LpStatus::unbounded;
    return out;
  }

  std::vector<double> u(total, 0.0);
  for (std::size_t r = 0; r < t.rows(); ++r) u[basis[r]] = std::max(0.0, t.rhs(r));
  Vec x(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    x(static_cast<Eigen::Index>(j)) =
        split[j] ? u[first_col[j]] - u[first_col[j] + 1] : p.lower_bounds[j] + u[first_col[j]];
  }
  if (!certify_feasible_point(p, x, cfg)) {
    throw Error(ErrorCode::internal, "simplex returned a point that fails re-validation");
  }
  out.point = std::move(x);
  out.value = p.objective.dot(out.point);
  out.status = p.objective.isZero(0.0) ? LpStatus::feasible : LpStatus::optimal;
  return out;
}

bool certify_feasible_point(const LinProgram& p, const Vec& x, const Config& cfg) {
  if (static_cast<std::size_t>(x.size()) != p.num_vars() || !x.allFinite()) return false;
  for (const auto& r : p.equalities) {
    if (std::abs(r.row.dot(x) - r.rhs) > cfg.tau_lp * row_scale(r, x)) return false;
  }
  for (const auto& r : p.inequalities_ge) {
    if (r.row.dot(x) < r.rhs - cfg.tau_lp * row_scale(r, x)) return false;
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    const double lb = p.lower_bounds[j];
    if (std::isfinite(lb) &&
        x(static_cast<Eigen::Index>(j)) < lb - cfg.tau_lp * std::max(1.0, std::abs(lb))) {
      return false;
    }
  }
  return true;
}

}  // namespace conekit
