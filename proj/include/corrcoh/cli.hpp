#pragma once

// Command implementations behind the corrcoh executable. Each command writes
// its result to cfg.output (or `out` when unset) and diagnostics to `err`,
// and returns the process exit status.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "corrcoh/coherence.hpp"
#include "corrcoh/state.hpp"

namespace corrcoh {

enum class Command { Measure, Sweep, Verify, Search };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Measure;
  std::optional<std::string> family;
  std::vector<Complex> params;
  std::optional<std::string> state_file;
  std::size_t grid_steps = 101;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  Dims dims{2, 2, 2};
  std::optional<std::size_t> pivot;
  std::optional<MeasureKind> measure;
  std::optional<std::string> output;
  std::optional<double> tolerance;
  /// search: draw Ginibre mixed states instead of Haar pure states.
  bool mixed = false;
  /// measure: also write the loaded state to this path as a state file.
  std::optional<std::string> dump_state;
};

/// "0.5,0.25:0.1" -> {0.5, 0.25+0.1i}; each token is `re` or `re:im`.
std::vector<Complex> parse_params(const std::string& text);

/// "2,2,2" -> {2, 2, 2}
Dims parse_dims_list(const std::string& text);

int cmd_measure(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace corrcoh
