#pragma once

#include "conekit/config.hpp"
#include "conekit/generators.hpp"
#include "conekit/problem.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace conekit {

enum class Generator { metzler, dense, perturbed_metzler, somewhere_positive_planted, mixed };
enum class Harness { theorem1, theorem2, spod };

/// "metzler", "dense", "perturbed-metzler", "somewhere-positive-planted", "mixed".
Generator parse_generator(const std::string& name);
std::string to_string(Generator g);
Harness parse_harness(const std::string& name);
std::string to_string(Harness h);

/// theorem2 for metzler / perturbed / mixed, spod for dense, theorem1 for planted.
Harness default_harness(Generator g);

struct Campaign {
  std::size_t count = 100;
  std::size_t n_min = 2;
  std::size_t n_max = 6;
  Generator generator = Generator::metzler;
  std::optional<Harness> harness;
  std::uint64_t seed = 0;
};

/// One generated instance as a replayable problem document. Planted
/// instances carry e and z; metzler instances carry z = -A 1.
struct FuzzInstance {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Generator generator = Generator::metzler;  ///< concrete, never mixed
  Problem problem;
};

FuzzInstance make_instance(const Campaign& c, std::size_t index);

struct InstanceResult {
  bool violation = false;
  nlohmann::json summary;
};

/// Runs one harness on a problem; identical inputs give identical output.
InstanceResult run_harness(Harness h, const Problem& p, const Config& cfg);

struct FuzzOutcome {
  nlohmann::json report;
  std::size_t violations = 0;
};

/// Instances are generated from instance_seed(seed, index) and reported in
/// index order; violations carry the full problem document for replay.
FuzzOutcome run_fuzz(const Campaign& c, const Config& cfg);

}  // namespace conekit
