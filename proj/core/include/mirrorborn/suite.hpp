#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mirrorborn {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured values and thresholds, human-readable
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  /// Deterministic CSV payloads keyed by file name, regenerated and compared
  /// byte for byte as part of the battery itself.
  std::map<std::string, std::string> artifacts;

  bool all_passed() const;
};

/// Runs the full self-check battery. Everything random is derived from
/// `seed`, so two runs with the same seed produce identical results and
/// identical artifact bytes.
SuiteResult run_acceptance_suite(std::uint64_t seed);

}  // namespace mirrorborn
