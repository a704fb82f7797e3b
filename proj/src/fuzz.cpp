#include "conekit/fuzz.hpp"

#include "conekit/error.hpp"
#include "conekit/report.hpp"

namespace conekit {

using nlohmann::json;

Generator parse_generator(const std::string& name) {
  if (name == "metzler") return Generator::metzler;
  if (name == "dense") return Generator::dense;
  if (name == "perturbed-metzler") return Generator::perturbed_metzler;
  if (name == "somewhere-positive-planted") return Generator::somewhere_positive_planted;
  if (name == "mixed") return Generator::mixed;
  throw Error(ErrorCode::invalid_argument, "unknown generator '" + name + "'");
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::metzler: return "metzler";
    case Generator::dense: return "dense";
    case Generator::perturbed_metzler: return "perturbed-metzler";
    case Generator::somewhere_positive_planted: return "somewhere-positive-planted";
    case Generator::mixed: return "mixed";
  }
  return "metzler";
}

Harness parse_harness(const std::string& name) {
  if (name == "theorem1") return Harness::theorem1;
  if (name == "theorem2") return Harness::theorem2;
  if (name == "spod") return Harness::spod;
  throw Error(ErrorCode::invalid_argument, "unknown harness '" + name + "'");
}

std::string to_string(Harness h) {
  switch (h) {
    case Harness::theorem1: return "theorem1";
    case Harness::theorem2: return "theorem2";
    case Harness::spod: return "spod";
  }
  return "theorem2";
}

Harness default_harness(Generator g) {
  switch (g) {
    case Generator::dense: return Harness::spod;
    case Generator::somewhere_positive_planted: return Harness::theorem1;
    default: return Harness::theorem2;
  }
}

FuzzInstance make_instance(const Campaign& c, std::size_t index) {
  if (c.n_min < 1 || c.n_max < c.n_min) {
    throw Error(ErrorCode::invalid_argument, "fuzz: need 1 <= n_min <= n_max");
  }
  FuzzInstance inst;
  inst.index = index;
  inst.seed = instance_seed(c.seed, index);
  Rng rng(inst.seed);
  const std::size_t n = c.n_min + rng.index(c.n_max - c.n_min + 1);

  inst.generator = c.generator;
  if (c.generator == Generator::mixed) {
    static constexpr Generator cycle[] = {Generator::metzler, Generator::dense,
                                          Generator::perturbed_metzler};
    inst.generator = cycle[index % 3];
  }
  switch (inst.generator) {
    case Generator::metzler: {
      inst.problem.matrix = random_metzler(n, rng);
      inst.problem.z = -(inst.problem.matrix * Vec::Ones(static_cast<Eigen::Index>(n)));
      break;
    }
    case Generator::dense: inst.problem.matrix = random_dense(n, rng); break;
    case Generator::perturbed_metzler:
      inst.problem.matrix = random_perturbed_metzler(n, rng);
      break;
    case Generator::somewhere_positive_planted: {
      auto planted = random_somewhere_positive_planted(n, rng);
      inst.problem.matrix = std::move(planted.a);
      inst.problem.z = std::move(planted.z);
      break;
    }
    case Generator::mixed: break;
  }
  return inst;
}

InstanceResult run_harness(Harness h, const Problem& p, const Config& cfg) {
  InstanceResult out;
  const auto k = domain_cone(p, cfg);
  switch (h) {
    case Harness::theorem2: {
      const auto r = theorem2_harness(p.matrix, k, cfg);
      out.violation = r.violation.has_value();
      out.summary = {{"cond_i_sampled", verdict_json(r.cond_i_sampled)},
                     {"cond_ii", verdict_json(r.cond_ii)},
                     {"cond_iii", verdict_json(r.cond_iii)},
                     {"cond_iv", verdict_json(r.cond_iv)},
                     {"agreement", r.agreement}};
      break;
    }
    case Harness::theorem1: {
      const auto ky = codomain_cone(p, cfg);
      const Vec z = p.z ? *p.z : ky.unit();
      const auto r = theorem1_verify(p.matrix, k, ky, z, cfg, p.e);
      out.violation = r.violation.has_value();
      out.summary = {{"hypotheses_hold", r.hypotheses.all_hold()},
                     {"somewhere_positive", verdict_json(r.hypotheses.somewhere_positive)}};
      if (r.conclusions) {
        out.summary["kernel_trivial"] = r.conclusions->kernel_trivial;
        out.summary["neg_inverse_positive"] = verdict_json(r.conclusions->neg_inverse_positive);
        out.summary["neg_inverse_min_entry"] = r.conclusions->neg_inverse_min_entry;
      }
      break;
    }
    case Harness::spod: {
      const bool invertible =
          p.matrix.rows() == p.matrix.cols() &&
          !singular_value_range(p.matrix).rank_deficient(cfg.tau_rank);
      const auto pod = is_positive_off_diagonal(p.matrix, k, cfg).verdict;
      const auto spod = is_somewhere_positive_off_diagonal(p.matrix, k, cfg).verdict;
      const bool agree = spod == Verdict::unknown || pod == spod;
      out.violation = invertible && !agree;
      out.summary = {{"invertible", invertible},
                     {"positive_off_diagonal", verdict_json(pod)},
                     {"somewhere_positive_off_diagonal", verdict_json(spod)},
                     {"agreement", agree}};
      break;
    }
  }
  return out;
}

FuzzOutcome run_fuzz(const Campaign& c, const Config& cfg) {
  const Harness harness = c.harness ? *c.harness : default_harness(c.generator);
  FuzzOutcome out;
  json instances = json::array();
  json violations = json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < c.count; ++i) {
    const auto inst = make_instance(c, i);
    const auto r = run_harness(harness, inst.problem, cfg);
    json entry = {{"index", i},
                  {"seed", inst.seed},
                  {"generator", to_string(inst.generator)},
                  {"n", inst.problem.matrix.rows()},
                  {"violation", r.violation},
                  {"summary", r.summary}};
    instances.push_back(std::move(entry));
    if (r.violation) {
      violations.push_back({{"index", i}, {"seed", inst.seed}, {"instance", to_json(inst.problem)}});
    } else {
      ++passed;
    }
  }
  out.violations = violations.size();
  json campaign = {{"count", c.count},
                   {"n_min", c.n_min},
                   {"n_max", c.n_max},
                   {"generator", to_string(c.generator)},
                   {"harness", to_string(harness)},
                   {"seed", c.seed}};
  json result = {{"instances", std::move(instances)},
                 {"passed", passed},
                 {"violations", std::move(violations)}};
  std::optional<std::string> violation;
  if (out.violations > 0) {
    violation = std::to_string(out.violations) + " instance(s) failed the " + to_string(harness) +
                " harness";
  }
  out.report = envelope("fuzz", cfg, std::move(campaign), std::move(result), violation);
  return out;
}

}  // namespace conekit
