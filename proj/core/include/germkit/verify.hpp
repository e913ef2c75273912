#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "germkit/int.hpp"

namespace germkit::verify {

struct Config {
  std::uint64_t seed = 1;
  /// Overrides every random trial count when set.
  std::optional<std::int64_t> trials;
  /// Truncation level for the groupoid and dynamics checks.
  Int level = 27720;
  /// Wiener-Hopf window, and the minimum oracle window for random words.
  std::int64_t window = 60;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first failure, empty on success
  double seconds = 0;
};

CriterionResult projection_identities(const Config& config);
CriterionResult composition_rule(const Config& config);
CriterionResult inverse_semigroup_axioms(const Config& config);
CriterionResult tight_characters(const Config& config);
CriterionResult cover_tightness(const Config& config);
CriterionResult groupoid_functoriality(const Config& config);
CriterionResult dynamics(const Config& config);
CriterionResult quasi_lattice(const Config& config);
CriterionResult text_round_trip(const Config& config);

/// All criteria in order; the callback sees each result as it completes.
std::vector<CriterionResult> run_all(const Config& config,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// One deterministic line: "[PASS] 3 inverse semigroup axioms (1000 cases)".
std::string format_line(const CriterionResult& r);

}  // namespace germkit::verify
