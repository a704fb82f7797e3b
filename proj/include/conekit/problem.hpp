#pragma once

#include "conekit/cone.hpp"
#include "conekit/config.hpp"
#include "conekit/linalg.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace conekit {

/// One input document:
///
///   {"matrix": [[1, -2], [-2, 1]],
///    "cone": {"generators": [[1, 0], [0, 1]]},   // optional, default orthant
///    "codomain_cone": {"generators": ...},       // optional, rectangular maps
///    "e": [1, 1], "z": [1, 1], "eps": [1, 1],    // optional vectors
///    "tolerances": {"tau": 1e-9}}                // optional Config overrides
///
/// Unknown fields are rejected.
struct Problem {
  Mat matrix;
  std::optional<Mat> cone;
  std::optional<Mat> codomain_cone;
  std::optional<Vec> e;
  std::optional<Vec> z;
  std::optional<Vec> eps;
  std::map<std::string, double> tolerances;
};

/// Throws Error(parse) with the offending line/column or field.
Problem parse_problem(std::string_view text);

/// Parses a standalone cone document {"generators": [[...]]}.
Mat parse_cone_document(std::string_view text);

/// Cone for the columns of the matrix: the generators if given, else the orthant.
ConeSpec domain_cone(const Problem& p, const Config& cfg);

/// codomain_cone if given; the domain cone for square matrices; else the orthant.
ConeSpec codomain_cone(const Problem& p, const Config& cfg);

nlohmann::json to_json(const Problem& p);
nlohmann::json to_json(const Mat& m);
nlohmann::json to_json(const Vec& v);

}  // namespace conekit
