#include "doctest.h"

#include "conekit/error.hpp"
#include "conekit/fuzz.hpp"
#include "conekit/problem.hpp"
#include "conekit/report.hpp"

#include <string>

using namespace conekit;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

std::string message_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

bool has_keys(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    if (!j.contains(k)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse the worked instance") {
  const auto p = parse_problem(R"({"matrix": [[1,-2],[-2,1]], "z": [1,1]})");
  CHECK(p.matrix.rows() == 2);
  CHECK(p.matrix(0, 1) == -2.0);
  REQUIRE(p.z);
  CHECK((*p.z)(1) == 1.0);
  CHECK_FALSE(p.cone);
}

TEST_CASE("parse errors") {
  CHECK(code_of(R"({"matrix": [[1,2],[3]]})") == ErrorCode::parse);
  CHECK(message_of(R"({"matrix": [[1,2],[3]]})").find("row 2") != std::string::npos);
  CHECK(code_of(R"({"matrix": [[1]], "zz": 1})") == ErrorCode::parse);
  CHECK(message_of(R"({"matrix": [[1]], "zz": 1})").find("zz") != std::string::npos);
  CHECK(code_of(R"({"matrix": [[1, )") == ErrorCode::parse);
  CHECK(code_of(R"({"z": [1]})") == ErrorCode::parse);
  CHECK(code_of(R"({"matrix": [[1, "a"]]})") == ErrorCode::parse);
  CHECK(code_of(R"({"matrix": [[1e999]]})") == ErrorCode::parse);
  CHECK(code_of(R"({"matrix": [[1,0],[0,1]], "cone": {"generators": [[1,0],[0,1]], "x": 1}})") ==
        ErrorCode::parse);
}

TEST_CASE("identity generators behave like the orthant") {
  const auto p = parse_problem(R"({"matrix": [[1,-2],[-2,1]], "cone": {"generators": [[1,0],[0,1]]}})");
  const Config cfg;
  const auto k = domain_cone(p, cfg);
  CHECK(k.dim() == 2);
  CHECK(k.generators() == Mat::Identity(2, 2));
  const auto with = classify_report(p, cfg).body;
  const auto without = classify_report(parse_problem(R"({"matrix": [[1,-2],[-2,1]]})"), cfg).body;
  CHECK(with["result"] == without["result"]);
}

TEST_CASE("report envelopes carry the documented keys") {
  const auto p = parse_problem(R"({"matrix": [[1,-2],[-2,1]], "z": [1,1]})");
  const Config cfg;
  for (const auto& r : {classify_report(p, cfg), theorem1_report(p, cfg), theorem2_report(p, cfg),
                        norms_report(p, cfg)}) {
    CHECK(has_keys(r.body, {"tool", "version", "command", "config", "input", "result", "violation"}));
    CHECK(r.body["violation"].is_null());
    CHECK_FALSE(r.violation);
    CHECK(json::parse(render_json(r.body)) == r.body);
    CHECK_FALSE(render_text(r.body).empty());
  }
  const auto c = classify_report(p, cfg).body["result"];
  CHECK(has_keys(c, {"somewhere_positive", "positive_off_diagonal", "somewhere_positive_off_diagonal",
                     "column_condition", "deleted_column_condition"}));
  CHECK(c["somewhere_positive"]["verdict"] == true);
  CHECK(c["positive_off_diagonal"]["verdict"] == false);
  CHECK(c["somewhere_positive_off_diagonal"]["verdict"] == false);

  const auto t1 = theorem1_report(p, cfg).body["result"];
  CHECK(has_keys(t1, {"hypotheses", "conclusions"}));
  const auto t2 = theorem2_report(p, cfg).body["result"];
  CHECK(has_keys(t2, {"lambda0", "cond_i_sampled", "cond_ii", "cond_iii", "cond_iv", "agreement"}));
}

TEST_CASE("tolerance overrides") {
  CHECK(apply_overrides(Config{}, {{"tau", 1e-6}}).tau == 1e-6);
  CHECK_THROWS_AS(apply_overrides(Config{}, {{"nope", 1.0}}), Error);
  CHECK_THROWS_AS(apply_overrides(Config{}, {{"tau", -1.0}}), Error);
}

TEST_CASE("fuzz campaigns are deterministic and replayable") {
  const Config cfg;
  Campaign c;
  c.count = 12;
  c.generator = Generator::mixed;
  c.seed = 7;
  const auto a = run_fuzz(c, cfg);
  const auto b = run_fuzz(c, cfg);
  CHECK(render_json(a.report) == render_json(b.report));
  CHECK(a.violations == 0);

  for (auto h : {Harness::theorem1, Harness::theorem2, Harness::spod}) {
    for (std::size_t i = 0; i < c.count; ++i) {
      const auto inst = make_instance(c, i);
      const auto text = to_json(inst.problem).dump();
      const auto replay = parse_problem(text);
      CHECK(replay.matrix == inst.problem.matrix);
      const auto first = run_harness(h, inst.problem, cfg);
      const auto again = run_harness(h, replay, cfg);
      CHECK(first.summary == again.summary);
      CHECK(first.violation == again.violation);
    }
  }
}

TEST_CASE("empty campaign") {
  Campaign c;
  c.count = 0;
  const auto out = run_fuzz(c, Config{});
  CHECK(out.violations == 0);
  CHECK(out.report["result"]["instances"].empty());
}

TEST_CASE("dense campaigns agree on the off-diagonal properties") {
  Campaign c;
  c.count = 100;
  c.generator = Generator::dense;
  c.seed = 3;
  const auto out = run_fuzz(c, Config{});
  CHECK(out.violations == 0);
  CHECK(default_harness(Generator::dense) == Harness::spod);
}

TEST_CASE("generator names round-trip") {
  for (auto g : {Generator::metzler, Generator::dense, Generator::perturbed_metzler,
                 Generator::somewhere_positive_planted, Generator::mixed})
    CHECK(parse_generator(to_string(g)) == g);
  for (auto h : {Harness::theorem1, Harness::theorem2, Harness::spod}) CHECK(parse_harness(to_string(h)) == h);
  CHECK_THROWS_AS(parse_generator("gaussian"), Error);
}
