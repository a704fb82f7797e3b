#include "conekit/report.hpp"

#include "conekit/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace conekit {

using nlohmann::json;

json verdict_json(Verdict v) {
  if (v == Verdict::unknown) return nullptr;
  return v == Verdict::yes;
}

namespace {

json maybe(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// JSON has no infinity; unbounded errors are reported as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json indices(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto i : v) out.push_back(i);
  return out;
}

json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, BoundaryCounterexample>) {
          return {{"kind", "boundary_counterexample"},
                  {"x", to_json(x.x)},
                  {"image", to_json(x.image)},
                  {"zero_set", indices(x.zero_set)}};
        } else if constexpr (std::is_same_v<T, FunctionalFamily>) {
          json members = json::array();
          for (const auto& m : x.members) {
            members.push_back({{"facet", m.facet}, {"psi", to_json(m.psi)}, {"margin", m.margin}});
          }
          return {{"kind", "functional_family"}, {"members", std::move(members)}};
        } else {
          return {{"kind", "entry_index"}, {"row", x.row},        {"col", x.col},
                  {"value", x.value},      {"x", to_json(x.x)}, {"phi", to_json(x.phi)}};
        }
      },
      w);
}

json screen_json(const ColumnScreen& s) {
  return {{"verdict", s.holds},
          {"vacuous", s.vacuous},
          {"failing_column", s.failing_column ? json(*s.failing_column) : json(nullptr)}};
}

}  // namespace

json to_json(const Config& cfg) {
  return {{"tau", cfg.tau},
          {"tau_sing", cfg.tau_sing},
          {"tau_lp", cfg.tau_lp},
          {"tau_rank", cfg.tau_rank},
          {"tau_expm", cfg.tau_expm},
          {"tau_rel", cfg.tau_rel},
          {"tau_res", cfg.tau_res},
          {"spod_max_dim", cfg.spod_max_dim},
          {"norm_max_dim", cfg.norm_max_dim},
          {"lp_max_vars", cfg.lp_max_vars}};
}

json to_json(const Decision& d) {
  return {{"verdict", verdict_json(d.verdict)},
          {"margin", d.margin},
          {"witness", witness_json(d.witness)},
          {"lps_solved", d.lps_solved}};
}

json to_json(const Classification& c) {
  json out;
  out["somewhere_positive"] = to_json(c.somewhere_positive);
  out["positive_off_diagonal"] =
      c.positive_off_diagonal ? to_json(*c.positive_off_diagonal) : json(nullptr);
  out["somewhere_positive_off_diagonal"] = c.somewhere_positive_off_diagonal
                                               ? to_json(*c.somewhere_positive_off_diagonal)
                                               : json(nullptr);
  out["column_condition"] = screen_json(c.column_condition);
  out["deleted_column_condition"] = screen_json(c.deleted_column_condition);
  return out;
}

json to_json(const Theorem1Report& r) {
  const auto& h = r.hypotheses;
  json out;
  out["hypotheses"] = {{"somewhere_positive", verdict_json(h.somewhere_positive)},
                       {"e", to_json(h.e)},
                       {"z", to_json(h.z)},
                       {"e_interior", h.e_interior},
                       {"z_quasi_interior", h.z_quasi_interior},
                       {"solvable", h.solvable},
                       {"residual", finite_or_null(h.residual)},
                       {"solve_note", h.note},
                       {"all_hold", h.all_hold()}};
  if (r.conclusions) {
    const auto& c = *r.conclusions;
    out["conclusions"] = {
        {"kernel_trivial", c.kernel_trivial},
        {"sigma_min", c.sigma_min},
        {"sigma_max", c.sigma_max},
        {"inverse_exists", c.inverse_exists},
        {"neg_inverse_positive", verdict_json(c.neg_inverse_positive)},
        {"neg_inverse_min_entry", c.neg_inverse_min_entry},
        {"neg_inverse", c.neg_inverse ? to_json(*c.neg_inverse) : json(nullptr)},
        {"inverse_positivity_counterexample", c.inverse_positivity_counterexample
                                                  ? to_json(*c.inverse_positivity_counterexample)
                                                  : json(nullptr)}};
  } else {
    out["conclusions"] = nullptr;
  }
  return out;
}

json to_json(const SemigroupReport& r) {
  json hy = json::array();
  for (const auto& p : r.hy_convergence) {
    hy.push_back({{"n", p.steps},
                  {"alpha", p.alpha},
                  {"error", finite_or_null(p.error)},
                  {"cone_positive", p.cone_positive}});
  }
  return {{"lambda0", r.lambda0},
          {"cond_i_sampled", verdict_json(r.cond_i_sampled)},
          {"cond_i_first_failure_t", maybe(r.cond_i_first_failure)},
          {"cond_ii", verdict_json(r.cond_ii)},
          {"cond_iii", verdict_json(r.cond_iii)},
          {"cond_iv", verdict_json(r.cond_iv)},
          {"cond_iv_first_failure_lambda", maybe(r.cond_iv_first_failure)},
          {"lambdas", r.lambdas_used},
          {"hy_convergence", std::move(hy)},
          {"contraction_check", r.contraction_check},
          {"agreement", r.agreement},
          {"events", r.events},
          {"dense_domain", "vacuous for matrices: every e in int X+ lies in the domain"}};
}

json envelope(const std::string& command, const Config& cfg, json input, json result,
              const std::optional<std::string>& violation) {
  return {{"tool", "conekit"},
          {"version", CONEKIT_VERSION},
          {"command", command},
          {"config", to_json(cfg)},
          {"input", std::move(input)},
          {"result", std::move(result)},
          {"violation", violation ? json("THEOREM VIOLATION: " + *violation) : json(nullptr)}};
}

Report classify_report(const Problem& p, const Config& cfg) {
  const auto kx = domain_cone(p, cfg);
  const auto ky = codomain_cone(p, cfg);
  const auto c = classify(p.matrix, kx, ky, cfg);
  std::optional<std::string> violation;
  const auto broken = c.violated_invariants(kx.dim());
  if (!broken.empty()) {
    std::string msg = "verdict implications fail:";
    for (const auto& b : broken) msg += " " + b + ";";
    violation = msg;
  }
  return {envelope("classify", cfg, to_json(p), to_json(c), violation), violation.has_value()};
}

Report theorem1_report(const Problem& p, const Config& cfg) {
  const auto kx = domain_cone(p, cfg);
  const auto ky = codomain_cone(p, cfg);
  const Vec z = p.z ? *p.z : ky.unit();
  const auto r = theorem1_verify(p.matrix, kx, ky, z, cfg, p.e);
  json result = to_json(r);
  if (!p.z) result["z_source"] = "default: G_Y 1";
  return {envelope("theorem1", cfg, to_json(p), std::move(result), r.violation),
          r.violation.has_value()};
}

Report theorem2_report(const Problem& p, const Config& cfg) {
  const auto k = domain_cone(p, cfg);
  if (p.matrix.rows() != p.matrix.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "theorem2 needs a square matrix");
  }
  const auto r = theorem2_harness(p.matrix, k, cfg);
  json result = to_json(r);
  std::optional<std::string> violation = r.violation;
  if (r.cond_ii == Verdict::yes) {
    const OrderUnit e(k, p.e ? *p.e : k.unit(), cfg);
    const auto c = contraction_rescaling_check(p.matrix, k, e, default_time_grid(), cfg);
    result["contraction_rescaling"] = {{"lambda0", c.lambda0},
                                       {"sup_unit_norm", c.sup_unit_norm},
                                       {"sup_operator_norm", c.sup_operator_norm},
                                       {"max_rescaling_error", c.max_rescaling_error},
                                       {"contraction_holds", c.contraction_holds},
                                       {"rescaling_holds", c.rescaling_holds}};
    if (!c.contraction_holds || !c.rescaling_holds) {
      violation = (violation ? *violation + "; " : std::string()) +
                  "contraction/rescaling check failed";
    }
  } else {
    result["contraction_rescaling"] = nullptr;
  }
  return {envelope("theorem2", cfg, to_json(p), std::move(result), violation),
          violation.has_value()};
}

Report norms_report(const Problem& p, const Config& cfg) {
  const auto kx = domain_cone(p, cfg);
  const auto ky = codomain_cone(p, cfg);
  const OrderUnit e(kx, p.e ? *p.e : kx.unit(), cfg);
  const OrderUnit eps(ky, p.eps ? *p.eps : ky.unit(), cfg);
  const auto pos = is_cone_positive(p.matrix, kx, ky, cfg);
  json result;
  result["cone_positive"] = pos.holds;
  result["min_orthant_entry"] = pos.min_entry;
  result["norm_of_be"] = order_unit_norm(ky, eps, p.matrix * e.vec());
  if (pos.holds) {
    const auto id = operator_norm_identity_check(kx, e, ky, eps, p.matrix, cfg);
    result["identity"] = {{"norm", id.norm}, {"norm_of_be", id.norm_of_be}, {"agree", id.agree}};
  } else {
    result["identity"] = nullptr;
    result["note"] = "operator is not cone-positive; ||B|| = ||B e||_eps is not claimed";
  }
  // The identity is a theorem for positive operators; disagreement is a defect.
  std::optional<std::string> violation;
  if (pos.holds && !result["identity"]["agree"].get<bool>()) {
    violation = "||B|| != ||B e||_eps for a cone-positive B";
  }
  return {envelope("norms", cfg, to_json(p), std::move(result), violation),
          violation.has_value()};
}

std::string render_json(const json& body) { return body.dump(2) + "\n"; }

namespace {

void render_value(std::ostringstream& os, const json& v, int indent);

std::string scalar_text(const json& v) {
  if (v.is_null()) return "null";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_number()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (x.is_structured()) {
      if (!is_flat_array(x)) return false;
    }
  }
  return true;
}

std::string flat_text(const json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += flat_text(v[i]);
  }
  return s + "]";
}

void render_value(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_object() || (val.is_array() && !is_flat_array(val))) {
        os << pad << key << ":\n";
        render_value(os, val, indent + 2);
      } else {
        os << pad << key << ": " << flat_text(val) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_structured() && !is_flat_array(v[i])) {
        os << pad << "- [" << i << "]\n";
        render_value(os, v[i], indent + 2);
      } else {
        os << pad << "- " << flat_text(v[i]) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_text(const json& body) {
  std::ostringstream os;
  render_value(os, body, 0);
  return os.str();
}

}  // namespace conekit
