#include "conekit/problem.hpp"

#include "conekit/error.hpp"

#include <cmath>
#include <set>

namespace conekit {

using nlohmann::json;

namespace {

using Index = Eigen::Index;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::parse, msg); }

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where + " is not finite");
  return d;
}

Vec parse_vector(const json& v, const std::string& name) {
  if (!v.is_array() || v.empty()) fail("'" + name + "' must be a non-empty array of numbers");
  Vec out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out(static_cast<Index>(i)) = number(v[i], name + "[" + std::to_string(i) + "]");
  }
  return out;
}

Mat parse_matrix(const json& v, const std::string& name) {
  if (!v.is_array() || v.empty()) fail("'" + name + "' must be a non-empty array of rows");
  std::size_t cols = 0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const auto& row = v[r];
    if (!row.is_array() || row.empty()) {
      fail(name + " row " + std::to_string(r + 1) + " must be a non-empty array");
    }
    if (r == 0) cols = row.size();
    if (row.size() != cols) {
      fail(name + " row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
           " entries, expected " + std::to_string(cols));
    }
  }
  Mat out(static_cast<Index>(v.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out(static_cast<Index>(r), static_cast<Index>(c)) =
          number(v[r][c], name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return out;
}

Mat parse_cone(const json& v, const std::string& name) {
  if (!v.is_object()) fail("'" + name + "' must be an object {\"generators\": [[...]]}");
  for (const auto& [key, _] : v.items()) {
    if (key != "generators") fail("unknown field '" + name + "." + key + "'");
  }
  if (!v.contains("generators")) fail("'" + name + "' is missing 'generators'");
  Mat g = parse_matrix(v["generators"], name + ".generators");
  if (g.rows() != g.cols()) fail(name + ".generators must be square");
  return g;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(err.byte > 0 ? err.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + err.what());
  } catch (const json::exception& err) {
    fail(err.what());
  }
}

}  // namespace

Problem parse_problem(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("input document must be a JSON object");
  static const std::set<std::string> known = {"matrix", "cone", "codomain_cone", "e",
                                               "z",      "eps",  "tolerances"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) fail("unknown field '" + key + "'");
  }
  if (!doc.contains("matrix")) fail("missing required field 'matrix'");

  Problem p;
  p.matrix = parse_matrix(doc["matrix"], "matrix");
  const auto rows = static_cast<std::size_t>(p.matrix.rows());
  const auto cols = static_cast<std::size_t>(p.matrix.cols());
  auto check_len = [](const Vec& v, std::size_t want, const std::string& name) {
    if (static_cast<std::size_t>(v.size()) != want) {
      fail("'" + name + "' has length " + std::to_string(v.size()) + ", expected " +
           std::to_string(want));
    }
  };
  if (doc.contains("cone")) {
    p.cone = parse_cone(doc["cone"], "cone");
    if (static_cast<std::size_t>(p.cone->rows()) != cols) {
      fail("cone dimension " + std::to_string(p.cone->rows()) + " does not match " +
           std::to_string(cols) + " matrix columns");
    }
  }
  if (doc.contains("codomain_cone")) {
    p.codomain_cone = parse_cone(doc["codomain_cone"], "codomain_cone");
    if (static_cast<std::size_t>(p.codomain_cone->rows()) != rows) {
      fail("codomain_cone dimension does not match the matrix rows");
    }
  }
  if (doc.contains("e")) {
    p.e = parse_vector(doc["e"], "e");
    check_len(*p.e, cols, "e");
  }
  if (doc.contains("z")) {
    p.z = parse_vector(doc["z"], "z");
    check_len(*p.z, rows, "z");
  }
  if (doc.contains("eps")) {
    p.eps = parse_vector(doc["eps"], "eps");
    check_len(*p.eps, rows, "eps");
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) fail("'tolerances' must be an object");
    for (const auto& [key, value] : t.items()) {
      p.tolerances[key] = number(value, "tolerances." + key);
    }
    try {
      (void)apply_overrides(Config{}, p.tolerances);
    } catch (const Error& err) {
      fail(err.what());
    }
  }
  return p;
}

Mat parse_cone_document(std::string_view text) { return parse_cone(parse_json(text), "cone"); }

ConeSpec domain_cone(const Problem& p, const Config& cfg) {
  if (p.cone) return ConeSpec::simplicial(*p.cone, cfg);
  return ConeSpec::orthant(static_cast<std::size_t>(p.matrix.cols()));
}

ConeSpec codomain_cone(const Problem& p, const Config& cfg) {
  if (p.codomain_cone) return ConeSpec::simplicial(*p.codomain_cone, cfg);
  if (p.matrix.rows() == p.matrix.cols()) return domain_cone(p, cfg);
  return ConeSpec::orthant(static_cast<std::size_t>(p.matrix.rows()));
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const Problem& p) {
  json doc;
  doc["matrix"] = to_json(p.matrix);
  if (p.cone) doc["cone"] = {{"generators", to_json(*p.cone)}};
  if (p.codomain_cone) doc["codomain_cone"] = {{"generators", to_json(*p.codomain_cone)}};
  if (p.e) doc["e"] = to_json(*p.e);
  if (p.z) doc["z"] = to_json(*p.z);
  if (p.eps) doc["eps"] = to_json(*p.eps);
  if (!p.tolerances.empty()) doc["tolerances"] = p.tolerances;
  return doc;
}

}  // namespace conekit
