#pragma once

#include <set>
#include <string>
#include <vector>

#include "zdring/limits.hpp"

namespace zdring {

/// Outcome of one verification scenario: a verdict, human-readable detail
/// lines and the library operations the scenario exercised.
struct ScenarioReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;
  std::set<std::string> operations_used;
};

struct ScenarioParams {
  /// Prime for prop5.
  long long p = 2;
};

/// cor1, prop5, prop4-counterexample, tn4-identities, theorem3-shape.
std::vector<std::string> scenario_names();

/// Runs a named scenario. Throws Error for an unknown name; library errors
/// (caps, NotPrime) propagate.
ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params = {},
                            const Limits& limits = {});

/// Names of every public operation the scenarios are expected to cover.
std::vector<std::string> public_operations();

}  // namespace zdring
