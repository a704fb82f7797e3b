#include "conekit/classify.hpp"

#include "conekit/error.hpp"
#include "conekit/lpkernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace conekit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Index = Eigen::Index;

// Entries of the conjugated matrix within tau of zero are rounding residue of
// G^{-1} A G; they are snapped so the LP sweeps see the same matrix that the
// entrywise tests accept.
Mat conjugate_snapped(const Mat& a, const ConeSpec& kx, const ConeSpec& ky, const Config& cfg) {
  Mat m = conjugate(a, kx, ky);
  if (kx.kind() == ConeKind::simplicial || ky.kind() == ConeKind::simplicial) {
    m = m.unaryExpr([&](double v) { return std::abs(v) <= cfg.tau ? 0.0 : v; });
  }
  return m;
}

Vec unit_vector(Index n, Index i) {
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

// psi >= 0, sum psi = 1, psi . col_j >= 0 for each j != facet.
std::optional<FacetFunctional> facet_functional(const Mat& at, std::size_t facet,
                                                const Config& cfg) {
  const Index m = at.rows();
  LinProgram lp(static_cast<std::size_t>(m));
  lp.add_equality(Vec::Ones(m), 1.0);
  for (Index j = 0; j < at.cols(); ++j) {
    if (static_cast<std::size_t>(j) == facet) continue;
    lp.add_ge(at.col(j), 0.0);
  }
  const auto out = solve(lp, cfg);
  if (!out.has_point()) return std::nullopt;
  FacetFunctional f;
  f.facet = facet;
  f.psi = out.point;
  double margin = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < at.cols(); ++j) {
    if (static_cast<std::size_t>(j) == facet) continue;
    margin = std::min(margin, f.psi.dot(at.col(j)));
  }
  f.margin = std::isfinite(margin) ? margin : 0.0;
  return f;
}

}  // namespace

Decision is_somewhere_positive(const Mat& a, const ConeSpec& kx, const ConeSpec& ky,
                               const Config& cfg) {
  require_finite(a, "matrix");
  const Mat at = conjugate_snapped(a, kx, ky, cfg);
  const Index n = at.cols();
  const Index m = at.rows();

  Decision d;
  for (Index facet = 0; facet < n; ++facet) {
    LinProgram lp(static_cast<std::size_t>(n));
    lp.add_equality(unit_vector(n, facet), 0.0);
    for (Index i = 0; i < m; ++i) lp.add_le(at.row(i).transpose(), -1.0);
    const auto out = solve(lp, cfg);
    ++d.lps_solved;
    if (!out.has_point()) continue;

    Vec y = out.point;
    y(facet) = 0.0;
    BoundaryCounterexample w;
    w.x = kx.from_orthant(y);
    w.image = a * w.x;
    w.zero_set.push_back(static_cast<std::size_t>(facet));
    const Vec image_y = at * y;
    // Re-validate by direct evaluation: the LP asked for <= -1.
    if (image_y.maxCoeff() > -0.5 || y.minCoeff() < -cfg.tau) {
      throw Error(ErrorCode::internal, "somewhere-positivity counterexample failed re-validation");
    }
    d.verdict = Verdict::no;
    d.margin = image_y.maxCoeff();
    d.witness = std::move(w);
    return d;
  }

  FunctionalFamily family;
  double margin = std::numeric_limits<double>::infinity();
  for (Index facet = 0; facet < n; ++facet) {
    auto f = facet_functional(at, static_cast<std::size_t>(facet), cfg);
    ++d.lps_solved;
    if (!f) {
      throw Error(ErrorCode::internal,
                  "facet " + std::to_string(facet) +
                      " admits neither a counterexample nor a dual functional");
    }
    margin = std::min(margin, f->margin);
    // Back to the pairing of the original coordinates: psi = G_Y^{-T} psi~.
    f->psi = ky.inverse_generators().transpose() * f->psi;
    family.members.push_back(std::move(*f));
  }
  d.verdict = Verdict::yes;
  d.margin = std::isfinite(margin) ? margin : 0.0;
  d.witness = std::move(family);
  return d;
}

ColumnScreen column_condition(const Mat& a) {
  ColumnScreen s;
  s.holds = true;
  for (Index j = 0; j < a.cols(); ++j) {
    if (a.rows() == 0 || a.col(j).maxCoeff() < 0.0) {
      s.holds = false;
      s.failing_column = static_cast<std::size_t>(j);
      break;
    }
  }
  return s;
}

ColumnScreen deleted_column_condition(const Mat& a) {
  if (a.cols() == 0) throw Error(ErrorCode::invalid_argument, "matrix has no columns");
  ColumnScreen s;
  if (a.cols() == 1) {
    s.holds = true;
    s.vacuous = true;
    return s;
  }
  s.holds = true;
  for (Index j = 0; j < a.cols() && s.holds; ++j) {
    bool found = false;
    for (Index i = 0; i < a.rows() && !found; ++i) {
      bool positive = true;
      for (Index k = 0; k < a.cols(); ++k) {
        if (k != j && !(a(i, k) > 0.0)) {
          positive = false;
          break;
        }
      }
      found = positive;
    }
    if (!found) {
      s.holds = false;
      s.failing_column = static_cast<std::size_t>(j);
    }
  }
  return s;
}

Decision is_positive_off_diagonal(const Mat& a, const ConeSpec& k, const Config& cfg) {
  require_square(a, "matrix");
  require_finite(a, "matrix");
  const Mat at = conjugate(a, k, k);
  const Index n = at.rows();

  Decision d;
  d.verdict = Verdict::yes;
  d.margin = std::numeric_limits<double>::infinity();
  Index bad_i = -1;
  Index bad_j = -1;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      d.margin = std::min(d.margin, at(i, j));
      if (bad_i < 0 && at(i, j) < -cfg.tau) {
        bad_i = i;
        bad_j = j;
      }
    }
  }
  if (n == 1) d.margin = 0.0;
  if (bad_i >= 0) {
    d.verdict = Verdict::no;
    EntryIndex w;
    w.row = static_cast<std::size_t>(bad_i);
    w.col = static_cast<std::size_t>(bad_j);
    w.value = at(bad_i, bad_j);
    w.x = k.generators().col(bad_j);
    w.phi = k.inverse_generators().row(bad_i).transpose();
    d.witness = std::move(w);
  }
  return d;
}

Decision is_somewhere_positive_off_diagonal(const Mat& a, const ConeSpec& k, const Config& cfg) {
  require_square(a, "matrix");
  require_finite(a, "matrix");
  const std::size_t n = k.dim();
  Decision d;
  if (n > cfg.spod_max_dim || n >= 63) {
    d.verdict = Verdict::unknown;
    return d;
  }
  const Mat at = conjugate_snapped(a, k, k, cfg);
  const Index ni = static_cast<Index>(n);

  d.margin = std::numeric_limits<double>::infinity();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t zmask = 1; zmask < subsets; ++zmask) {
    std::vector<Index> off;
    for (Index j = 0; j < ni; ++j) {
      if (!((zmask >> j) & 1U)) off.push_back(j);
    }
    // Z = everything pins x = 0, where A~ x = 0 cannot be <= -1.
    if (off.empty()) continue;

    LinProgram lp(off.size());
    for (std::size_t c = 0; c < off.size(); ++c) lp.lower_bounds[c] = 1.0;
    for (Index i = 0; i < ni; ++i) {
      if (!((zmask >> i) & 1U)) continue;
      Vec row(static_cast<Index>(off.size()));
      for (std::size_t c = 0; c < off.size(); ++c) row(static_cast<Index>(c)) = at(i, off[c]);
      lp.add_le(std::move(row), -1.0);
    }
    const auto out = solve(lp, cfg);
    ++d.lps_solved;
    if (!out.has_point()) continue;

    Vec y = Vec::Zero(ni);
    for (std::size_t c = 0; c < off.size(); ++c) y(off[c]) = out.point(static_cast<Index>(c));
    const Vec image_y = at * y;
    BoundaryCounterexample w;
    double worst = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < ni; ++i) {
      if ((zmask >> i) & 1U) {
        w.zero_set.push_back(static_cast<std::size_t>(i));
        worst = std::max(worst, image_y(i));
      }
    }
    if (worst > -0.5) {
      throw Error(ErrorCode::internal,
                  "off-diagonal counterexample failed re-validation");
    }
    w.x = k.from_orthant(y);
    w.image = a * w.x;
    d.verdict = Verdict::no;
    d.margin = worst;
    d.witness = std::move(w);
    return d;
  }
  d.verdict = Verdict::yes;
  d.margin = 0.0;
  return d;
}

Mat shift(const Mat& a, double lambda) {
  require_square(a, "matrix");
  return a - lambda * Mat::Identity(a.rows(), a.cols());
}

PositivityCheck is_cone_positive(const Mat& b, const ConeSpec& kx, const ConeSpec& ky,
                                 const Config& cfg) {
  require_finite(b, "operator");
  const Mat bt = conjugate(b, kx, ky);
  PositivityCheck c;
  if (bt.size() == 0) {
    c.holds = true;
    return c;
  }
  Index r = 0;
  Index col = 0;
  c.min_entry = bt.minCoeff(&r, &col);
  c.row = static_cast<std::size_t>(r);
  c.col = static_cast<std::size_t>(col);
  c.holds = c.min_entry >= -cfg.tau;
  return c;
}

Classification classify(const Mat& a, const ConeSpec& kx, const ConeSpec& ky, const Config& cfg) {
  Classification c;
  c.somewhere_positive = is_somewhere_positive(a, kx, ky, cfg);
  const Mat at = conjugate(a, kx, ky);
  c.column_condition = column_condition(at);
  c.deleted_column_condition = deleted_column_condition(at);
  if (a.rows() == a.cols() && kx.dim() == ky.dim() && kx.generators() == ky.generators()) {
    c.positive_off_diagonal = is_positive_off_diagonal(a, kx, cfg);
    c.somewhere_positive_off_diagonal = is_somewhere_positive_off_diagonal(a, kx, cfg);
  }
  return c;
}

std::vector<std::string> Classification::violated_invariants(std::size_t domain_dim) const {
  std::vector<std::string> out;
  const bool sp = somewhere_positive.verdict == Verdict::yes;
  if (positive_off_diagonal && somewhere_positive_off_diagonal) {
    const auto pod = positive_off_diagonal->verdict;
    const auto spod = somewhere_positive_off_diagonal->verdict;
    if (pod == Verdict::yes && spod == Verdict::no) {
      out.emplace_back("positive_off_diagonal => somewhere_positive_off_diagonal");
    }
    if (spod == Verdict::yes && !sp) {
      out.emplace_back("somewhere_positive_off_diagonal => somewhere_positive");
    }
    if (pod == Verdict::yes && !sp) out.emplace_back("positive_off_diagonal => somewhere_positive");
  }
  if (deleted_column_condition.holds && !sp) {
    out.emplace_back("deleted_column_condition => somewhere_positive");
  }
  // e_j lies on the boundary only when the domain has dimension >= 2.
  if (domain_dim >= 2 && sp && !column_condition.holds) {
    out.emplace_back("somewhere_positive => column_condition");
  }
  return out;
}

}  // namespace conekit
