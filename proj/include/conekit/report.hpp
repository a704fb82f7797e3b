#pragma once

#include "conekit/classify.hpp"
#include "conekit/config.hpp"
#include "conekit/invpos.hpp"
#include "conekit/problem.hpp"
#include "conekit/semigroup.hpp"

#include "json.hpp"

#include <string>

namespace conekit {

/// A rendered command result. `violation` marks a THEOREM VIOLATION: the
/// hypotheses of a theorem were verified and a conclusion check failed.
struct Report {
  nlohmann::json body;
  bool violation = false;
};

Report classify_report(const Problem& p, const Config& cfg);
Report theorem1_report(const Problem& p, const Config& cfg);
Report theorem2_report(const Problem& p, const Config& cfg);
Report norms_report(const Problem& p, const Config& cfg);

/// true / false, or null for an undecided verdict.
nlohmann::json verdict_json(Verdict v);

nlohmann::json to_json(const Config& cfg);
nlohmann::json to_json(const Decision& d);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const Theorem1Report& r);
nlohmann::json to_json(const SemigroupReport& r);

/// Common envelope: tool, version, command, config echo, input, result,
/// violation.
nlohmann::json envelope(const std::string& command, const Config& cfg, nlohmann::json input,
                        nlohmann::json result, const std::optional<std::string>& violation);

std::string render_json(const nlohmann::json& body);

/// Indented key: value listing; numbers printed with 17 significant digits.
std::string render_text(const nlohmann::json& body);

}  // namespace conekit
