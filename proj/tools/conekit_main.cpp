// conekit command-line front end. Talks to the library through the C API only.
//
// Exit codes: 0 clean run (verdicts are data), 1 usage / IO / input errors,
// 2 THEOREM VIOLATION.

#include "conekit/conekit.h"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct CommonOptions {
  std::string input;
  std::string cone_file;
  std::optional<std::size_t> orthant;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

struct FuzzOptions {
  std::size_t count = 100;
  std::size_t n_min = 2;
  std::size_t n_max = 6;
  std::string generator = "metzler";
  std::string harness;
};

struct ProblemDeleter {
  void operator()(ck_problem* p) const { ck_problem_destroy(p); }
};
struct ConfigDeleter {
  void operator()(ck_config* c) const { ck_config_destroy(c); }
};
struct ReportDeleter {
  void operator()(ck_report* r) const { ck_report_destroy(r); }
};

using ProblemPtr = std::unique_ptr<ck_problem, ProblemDeleter>;
using ConfigPtr = std::unique_ptr<ck_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<ck_report, ReportDeleter>;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(ck_status s, const std::string& context) {
  if (s != CK_OK) {
    throw CliError(context + ": " + ck_status_name(s) + ": " + ck_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_common(CLI::App* cmd, CommonOptions& o, bool needs_input) {
  auto* cone = cmd->add_option("--cone", o.cone_file, "JSON file {\"generators\": [[...]]}");
  auto* orth = cmd->add_option("--orthant", o.orthant, "use the standard orthant of dimension N");
  cone->excludes(orth);
  cmd->add_option("--tol", o.tol, "membership tolerance tau (default 1e-9)");
  cmd->add_option("--seed", o.seed, "64-bit seed");
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
  if (needs_input) cmd->add_option("INPUT", o.input, "problem document (JSON)")->required();
}

ConfigPtr make_config(const CommonOptions& o) {
  ck_config* raw = nullptr;
  check(ck_config_create(&raw), "config");
  ConfigPtr cfg(raw);
  if (o.tol) check(ck_config_set(cfg.get(), "tau", *o.tol), "--tol");
  return cfg;
}

ProblemPtr load_problem(const CommonOptions& o) {
  const std::string text = read_file(o.input);
  ck_problem* raw = nullptr;
  check(ck_problem_parse(text.c_str(), &raw), o.input);
  ProblemPtr p(raw);
  if (!o.cone_file.empty()) {
    check(ck_problem_set_cone_json(p.get(), read_file(o.cone_file).c_str()), o.cone_file);
  }
  if (o.orthant) check(ck_problem_set_orthant(p.get(), *o.orthant), "--orthant");
  return p;
}

int emit(ck_report* report, const CommonOptions& o) {
  const char* text = ck_report_render(report, o.format == "json" ? CK_FORMAT_JSON : CK_FORMAT_TEXT);
  if (!text) throw CliError(std::string("render: ") + ck_last_error());
  if (o.out.empty()) {
    std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
    std::fflush(stdout);
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw CliError("cannot write '" + o.out + "'");
    out << text;
    if (!out) throw CliError("write failed for '" + o.out + "'");
  }
  if (ck_report_violation(report)) {
    std::cerr << "conekit: THEOREM VIOLATION recorded in the report\n";
    return kExitViolation;
  }
  return kExitOk;
}

using Runner = ck_status (*)(const ck_problem*, const ck_config*, ck_report**);

int run_problem_command(const char* name, Runner runner, const CommonOptions& o) {
  const auto cfg = make_config(o);
  const auto problem = load_problem(o);
  ck_report* raw = nullptr;
  check(runner(problem.get(), cfg.get(), &raw), name);
  ReportPtr report(raw);
  return emit(report.get(), o);
}

int run_fuzz_command(const CommonOptions& o, const FuzzOptions& f) {
  const auto cfg = make_config(o);
  ck_fuzz_options opts;
  ck_fuzz_options_default(&opts);
  opts.count = f.count;
  opts.n_min = f.n_min;
  opts.n_max = f.n_max;
  opts.generator = f.generator.c_str();
  opts.harness = f.harness.empty() ? nullptr : f.harness.c_str();
  opts.seed = o.seed;
  ck_report* raw = nullptr;
  check(ck_run_fuzz(&opts, cfg.get(), &raw), "fuzz");
  ReportPtr report(raw);
  return emit(report.get(), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conekit: positivity properties of matrices on ordered spaces"};
  app.set_version_flag("--version", std::string("conekit ") + ck_version());
  app.require_subcommand(1);

  CommonOptions classify_o, t1_o, t2_o, norms_o, fuzz_o;
  FuzzOptions fuzz_f;

  auto* classify = app.add_subcommand("classify", "somewhere positive / off-diagonal verdicts");
  add_common(classify, classify_o, true);
  auto* t1 = app.add_subcommand("theorem1", "inverse positivity from an order-unit solution");
  add_common(t1, t1_o, true);
  auto* t2 = app.add_subcommand("theorem2", "positive-semigroup generator equivalences");
  add_common(t2, t2_o, true);
  auto* norms = app.add_subcommand("norms", "operator norm identity for positive maps");
  add_common(norms, norms_o, true);
  auto* fuzz = app.add_subcommand("fuzz", "seeded random campaigns");
  add_common(fuzz, fuzz_o, false);
  fuzz->add_option("--count", fuzz_f.count, "number of instances");
  fuzz->add_option("--n-min", fuzz_f.n_min, "smallest dimension");
  fuzz->add_option("--n-max", fuzz_f.n_max, "largest dimension");
  fuzz->add_option("--generator", fuzz_f.generator)
      ->check(CLI::IsMember(
          {"metzler", "dense", "perturbed-metzler", "somewhere-positive-planted", "mixed"}));
  fuzz->add_option("--harness", fuzz_f.harness)
      ->check(CLI::IsMember({"theorem1", "theorem2", "spod"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*classify) return run_problem_command("classify", ck_run_classify, classify_o);
    if (*t1) return run_problem_command("theorem1", ck_run_theorem1, t1_o);
    if (*t2) return run_problem_command("theorem2", ck_run_theorem2, t2_o);
    if (*norms) return run_problem_command("norms", ck_run_norms, norms_o);
    if (*fuzz) return run_fuzz_command(fuzz_o, fuzz_f);
  } catch (const CliError& e) {
    std::cerr << "conekit: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
