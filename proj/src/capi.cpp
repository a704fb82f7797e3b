#include "conekit/conekit.h"

#include "conekit/config.hpp"
#include "conekit/error.hpp"
#include "conekit/fuzz.hpp"
#include "conekit/problem.hpp"
#include "conekit/report.hpp"

#include <exception>
#include <map>
#include <new>
#include <string>

struct ck_config {
  std::map<std::string, double> overrides;
};

struct ck_problem {
  conekit::Problem problem;
};

struct ck_report {
  conekit::Report report;
  std::string rendered;
};

namespace {

thread_local std::string last_error;

ck_status fail(ck_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

template <class F>
ck_status guarded(F&& body) {
  try {
    body();
    return CK_OK;
  } catch (const conekit::Error& err) {
    return fail(static_cast<ck_status>(err.code()), err.what());
  } catch (const std::bad_alloc&) {
    return fail(CK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& err) {
    return fail(CK_ERR_INTERNAL, err.what());
  }
}

conekit::Config effective(const ck_problem* p, const ck_config* cfg) {
  std::map<std::string, double> merged = p ? p->problem.tolerances : std::map<std::string, double>{};
  if (cfg) {
    for (const auto& [k, v] : cfg->overrides) merged[k] = v;
  }
  return conekit::apply_overrides(conekit::Config{}, merged);
}

template <class F>
ck_status run_command(const ck_problem* problem, const ck_config* cfg, ck_report** out, F&& fn) {
  if (!problem || !out) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto config = effective(problem, cfg);
    *out = new ck_report{fn(problem->problem, config), {}};
  });
}

}  // namespace

extern "C" {

const char* ck_version(void) { return CONEKIT_VERSION; }

const char* ck_status_name(ck_status status) {
  switch (status) {
    case CK_OK: return "ok";
    case CK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CK_ERR_DIMENSION: return "dimension mismatch";
    case CK_ERR_SINGULAR: return "singular";
    case CK_ERR_GUARD: return "guard exceeded";
    case CK_ERR_PRECONDITION: return "precondition failed";
    case CK_ERR_NUMERIC: return "numeric failure";
    case CK_ERR_PARSE: return "parse error";
    case CK_ERR_IO: return "io error";
    case CK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ck_last_error(void) { return last_error.c_str(); }

ck_status ck_config_create(ck_config** out) {
  if (!out) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ck_config{}; });
}

void ck_config_destroy(ck_config* cfg) { delete cfg; }

ck_status ck_config_set(ck_config* cfg, const char* key, double value) {
  if (!cfg || !key) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    (void)conekit::apply_overrides(conekit::Config{}, {{key, value}});
    cfg->overrides[key] = value;
  });
}

ck_status ck_config_get(const ck_config* cfg, const char* key, double* out) {
  if (!key || !out) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto c = effective(nullptr, cfg);
    const auto j = conekit::to_json(c);
    if (!j.contains(key)) throw conekit::Error(conekit::ErrorCode::invalid_argument,
                                               std::string("unknown config key '") + key + "'");
    *out = j[key].get<double>();
  });
}

ck_status ck_problem_parse(const char* json_text, ck_problem** out) {
  if (!json_text || !out) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new ck_problem{conekit::parse_problem(json_text)}; });
}

ck_status ck_problem_create(const double* data, size_t rows, size_t cols, ck_problem** out) {
  if (!data || !out || rows == 0 || cols == 0) return fail(CK_ERR_INVALID_ARGUMENT, "bad matrix");
  *out = nullptr;
  return guarded([&] {
    conekit::Problem p;
    p.matrix = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        data, static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    conekit::require_finite(p.matrix, "matrix");
    *out = new ck_problem{std::move(p)};
  });
}

void ck_problem_destroy(ck_problem* problem) { delete problem; }

ck_status ck_problem_set_cone(ck_problem* problem, const double* generators, size_t n) {
  if (!problem || !generators) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    conekit::require_dim(n, static_cast<std::size_t>(problem->problem.matrix.cols()),
                         "cone vs matrix columns");
    const auto ni = static_cast<Eigen::Index>(n);
    conekit::Mat g =
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
            generators, ni, ni);
    (void)conekit::ConeSpec::simplicial(g);
    problem->problem.cone = std::move(g);
  });
}

ck_status ck_problem_set_cone_json(ck_problem* problem, const char* json_text) {
  if (!problem || !json_text) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    conekit::Mat g = conekit::parse_cone_document(json_text);
    conekit::require_dim(static_cast<std::size_t>(g.rows()),
                         static_cast<std::size_t>(problem->problem.matrix.cols()),
                         "cone vs matrix columns");
    problem->problem.cone = std::move(g);
  });
}

ck_status ck_problem_set_orthant(ck_problem* problem, size_t n) {
  if (!problem) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    conekit::require_dim(n, static_cast<std::size_t>(problem->problem.matrix.cols()),
                         "orthant vs matrix columns");
    problem->problem.cone.reset();
  });
}

ck_status ck_problem_set_vector(ck_problem* problem, const char* name, const double* data,
                                size_t len) {
  if (!problem || !name || !data) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    conekit::Vec v = Eigen::Map<const conekit::Vec>(data, static_cast<Eigen::Index>(len));
    conekit::require_finite(v, name);
    auto& p = problem->problem;
    const std::string key = name;
    const auto rows = static_cast<std::size_t>(p.matrix.rows());
    const auto cols = static_cast<std::size_t>(p.matrix.cols());
    if (key == "e") {
      conekit::require_dim(len, cols, "e");
      p.e = std::move(v);
    } else if (key == "z") {
      conekit::require_dim(len, rows, "z");
      p.z = std::move(v);
    } else if (key == "eps") {
      conekit::require_dim(len, rows, "eps");
      p.eps = std::move(v);
    } else {
      throw conekit::Error(conekit::ErrorCode::invalid_argument, "unknown vector '" + key + "'");
    }
  });
}

ck_status ck_problem_shape(const ck_problem* problem, size_t* rows, size_t* cols) {
  if (!problem || !rows || !cols) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  *rows = static_cast<size_t>(problem->problem.matrix.rows());
  *cols = static_cast<size_t>(problem->problem.matrix.cols());
  return CK_OK;
}

ck_status ck_run_classify(const ck_problem* problem, const ck_config* cfg, ck_report** out) {
  return run_command(problem, cfg, out, conekit::classify_report);
}

ck_status ck_run_theorem1(const ck_problem* problem, const ck_config* cfg, ck_report** out) {
  return run_command(problem, cfg, out, conekit::theorem1_report);
}

ck_status ck_run_theorem2(const ck_problem* problem, const ck_config* cfg, ck_report** out) {
  return run_command(problem, cfg, out, conekit::theorem2_report);
}

ck_status ck_run_norms(const ck_problem* problem, const ck_config* cfg, ck_report** out) {
  return run_command(problem, cfg, out, conekit::norms_report);
}

void ck_fuzz_options_default(ck_fuzz_options* opts) {
  if (!opts) return;
  opts->count = 100;
  opts->n_min = 2;
  opts->n_max = 6;
  opts->generator = "metzler";
  opts->harness = nullptr;
  opts->seed = 0;
}

ck_status ck_run_fuzz(const ck_fuzz_options* opts, const ck_config* cfg, ck_report** out) {
  if (!opts || !out) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    conekit::Campaign c;
    c.count = opts->count;
    c.n_min = opts->n_min;
    c.n_max = opts->n_max;
    c.generator = conekit::parse_generator(opts->generator ? opts->generator : "metzler");
    if (opts->harness) c.harness = conekit::parse_harness(opts->harness);
    c.seed = opts->seed;
    auto outcome = conekit::run_fuzz(c, effective(nullptr, cfg));
    *out = new ck_report{{std::move(outcome.report), outcome.violations > 0}, {}};
  });
}

void ck_report_destroy(ck_report* report) { delete report; }

int ck_report_violation(const ck_report* report) {
  return report && report->report.violation ? 1 : 0;
}

const char* ck_report_render(ck_report* report, ck_format format) {
  if (!report) {
    fail(CK_ERR_INVALID_ARGUMENT, "null argument");
    return nullptr;
  }
  report->rendered = format == CK_FORMAT_JSON ? conekit::render_json(report->report.body)
                                              : conekit::render_text(report->report.body);
  return report->rendered.c_str();
}

namespace {

ck_status lookup(const ck_report* report, const char* pointer, nlohmann::json* out) {
  if (!report || !pointer) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const nlohmann::json::json_pointer ptr(pointer);
    if (!report->report.body.contains(ptr)) {
      throw conekit::Error(conekit::ErrorCode::invalid_argument,
                           std::string("no field at '") + pointer + "'");
    }
    *out = report->report.body.at(ptr);
  });
}

}  // namespace

ck_status ck_report_get_number(const ck_report* report, const char* pointer, double* out) {
  if (!out) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  nlohmann::json v;
  const ck_status s = lookup(report, pointer, &v);
  if (s != CK_OK) return s;
  if (!v.is_number()) return fail(CK_ERR_INVALID_ARGUMENT, std::string("not a number: ") + pointer);
  *out = v.get<double>();
  return CK_OK;
}

ck_status ck_report_get_bool(const ck_report* report, const char* pointer, int* out) {
  if (!out) return fail(CK_ERR_INVALID_ARGUMENT, "null argument");
  nlohmann::json v;
  const ck_status s = lookup(report, pointer, &v);
  if (s != CK_OK) return s;
  if (v.is_null()) {
    *out = -1;
    return CK_OK;
  }
  if (!v.is_boolean()) return fail(CK_ERR_INVALID_ARGUMENT, std::string("not a boolean: ") + pointer);
  *out = v.get<bool>() ? 1 : 0;
  return CK_OK;
}

}  // extern "C"
