#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harness/scenario.hpp"

namespace dvb {

enum class Status { Pass, Fail, Skip };

const char* status_name(Status s);

struct PropertyResult {
  std::string id;
  Status status = Status::Pass;
  std::string detail;
  std::uint64_t seed = 0;
  double millis = 0;
};

struct RunOptions {
  /// Overrides the scenario's sample count when positive.
  int samples = 0;
  bool naive_identification = false;
  /// Runs a single property when nonempty.
  std::string only;
  /// Replay hint: scenario path, or empty for a generated scenario.
  std::string scenario_path;
  /// Extra generator flags appended to replay hints, e.g. "--symmetric".
  std::string replay_args;
};

struct Report {
  std::string suite;
  std::string source;
  std::uint64_t seed = 0;
  int samples = 0;
  bool naive_identification = false;
  std::string replay_args;
  std::vector<PropertyResult> results;

  bool passed() const;
  std::size_t count(Status s) const;
  /// Command line that reruns one property with the same seed and samples.
  std::string replay_command(const PropertyResult& r) const;
};

/// axioms, duality, third-dual, geometry, all; plus the single-check suites
/// connection-metric, connection-symmetric, connection-lagrangian.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
std::vector<std::string> property_ids(const std::string& suite, bool naive_identification = false);

/// Per-property seed: scenario seed xor FNV-1a of the property id.
std::uint64_t property_seed(std::uint64_t scenario_seed, const std::string& id);

/// Results are sorted by property id. Throws Error(Unsupported) for an
/// unknown suite or property, Error(InconsistentScenario) when a check
/// needs a section the scenario lacks.
Report run_suite(const std::string& suite, const Scenario& scenario, const RunOptions& options = {});

}  // namespace dvb
