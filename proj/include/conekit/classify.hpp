#pragma once

#include "conekit/cone.hpp"
#include "conekit/config.hpp"
#include "conekit/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conekit {

enum class Verdict { no, yes, unknown };

const char* to_string(Verdict v);

/// A boundary point x of the domain cone whose image violates the property.
/// `zero_set` lists the orthant-coordinate indices pinned to zero.
struct BoundaryCounterexample {
  Vec x;
  Vec image;  ///< A x
  std::vector<std::size_t> zero_set;
};

/// psi in the dual cone with <psi, A x> >= 0 on every generator of `facet`.
struct FacetFunctional {
  std::size_t facet = 0;
  Vec psi;
  double margin = 0.0;  ///< min over the facet's generators of <psi, A g>
};

struct FunctionalFamily {
  std::vector<FacetFunctional> members;
};

/// Off-diagonal entry (row, col) of G^{-1} A G below -tau, realised by the
/// extreme ray x = G e_col and the dual functional phi = row `row` of G^{-1}.
struct EntryIndex {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
  Vec x;
  Vec phi;
};

using Witness = std::variant<std::monostate, BoundaryCounterexample, FunctionalFamily, EntryIndex>;

struct Decision {
  Verdict verdict = Verdict::unknown;
  double margin = 0.0;
  Witness witness;
  std::size_t lps_solved = 0;
};

struct ColumnScreen {
  bool holds = false;
  bool vacuous = false;
  std::optional<std::size_t> failing_column;
};

struct PositivityCheck {
  bool holds = false;
  double min_entry = 0.0;  ///< of G_Y^{-1} B G_X
  std::size_t row = 0;     ///< location of min_entry
  std::size_t col = 0;
};

struct Classification {
  Decision somewhere_positive;
  std::optional<Decision> positive_off_diagonal;            ///< square only
  std::optional<Decision> somewhere_positive_off_diagonal;  ///< square only
  ColumnScreen column_condition;
  ColumnScreen deleted_column_condition;

  /// Names of implications between verdicts that fail; empty when consistent.
  std::vector<std::string> violated_invariants(std::size_t domain_dim) const;
};

/// For every boundary x of K_X some nonzero psi in K_Y^* has <psi, A x> >= 0.
///
/// A x is strictly negative against the whole dual cone iff its orthant
/// coordinates are componentwise negative, and the condition is positively
/// homogeneous, so facet i fails iff {x >= 0, x_i = 0, A~ x <= -1} is
/// feasible. A true verdict carries, per facet, a psi >= 0 with
/// psi^T A~ >= 0 on the facet (the alternative in Ville's theorem).
Decision is_somewhere_positive(const Mat& a, const ConeSpec& kx, const ConeSpec& ky,
                               const Config& cfg = {});

/// Every column has a non-negative entry (orthant coordinates).
ColumnScreen column_condition(const Mat& a);

/// Deleting any one column leaves a row with all entries > 0. A single-column
/// matrix is vacuously true.
ColumnScreen deleted_column_condition(const Mat& a);

/// Cross-positivity: off-diagonal entries of G^{-1} A G are >= -tau.
Decision is_positive_off_diagonal(const Mat& a, const ConeSpec& k, const Config& cfg = {});

/// Face sweep over every nonempty zero set Z: the property fails on Z iff
/// {x_Z = 0, x_j >= 1 off Z, (A~ x)_i <= -1 on Z} is feasible. Returns
/// Verdict::unknown above cfg.spod_max_dim.
Decision is_somewhere_positive_off_diagonal(const Mat& a, const ConeSpec& k,
                                            const Config& cfg = {});

/// A - lambda I.
Mat shift(const Mat& a, double lambda);

/// B maps K_X into K_Y: every entry of G_Y^{-1} B G_X is >= -tau.
PositivityCheck is_cone_positive(const Mat& b, const ConeSpec& kx, const ConeSpec& ky,
                                 const Config& cfg = {});

/// All verdicts. The column screens are evaluated on A~ = G_Y^{-1} A G_X.
Classification classify(const Mat& a, const ConeSpec& kx, const ConeSpec& ky,
                        const Config& cfg = {});

}  // namespace conekit
