#pragma once

// Bundled invariant suite: fixed fixtures plus randomized checks of every
// relation, aggregated per relation.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "corrcoh/monogamy.hpp"

namespace corrcoh {

struct SuiteEntry {
  std::string relation;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Most adverse gap seen (smallest gap for inequalities, largest |gap|
  /// for equalities, reported with its sign).
  double worst_gap = 0.0;
  std::string worst_descriptor;
  /// -gap for inequalities, |gap| for equalities; drives worst_gap.
  double worst_adversity = -std::numeric_limits<double>::infinity();
  /// First error message, when a check threw instead of producing a gap.
  std::string note;

  bool passed() const noexcept { return checks > 0 && failures == 0; }
  void record(const GapReport& r);
  void record_error(const std::string& descriptor, const std::string& message);
};

struct SuiteOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  /// Replaces the 1e-9 gap tolerance when set. Fixed algebraic checks keep
  /// their own tighter tolerances.
  std::optional<double> tolerance;
  /// Extra state files checked as fixtures.
  std::vector<std::string> fixture_files;
};

std::vector<SuiteEntry> run_verification_suite(const SuiteOptions& opts);

}  // namespace corrcoh
