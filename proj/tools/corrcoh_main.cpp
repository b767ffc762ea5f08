// corrcoh: coherence measures, monogamy sweeps, invariant suite and
// conjecture search for multipartite states.

#include <iostream>

#include "CLI11.hpp"

#include "corrcoh/cli.hpp"

namespace {

struct RawFlags {
  std::string family;
  std::string params;
  std::string state_file;
  std::string dims;
  std::string measure;
  std::string out;
  std::string dump_state;
  std::size_t pivot = 0;
  double tolerance = 0.0;
};

void add_common(CLI::App* cmd, RawFlags& raw, corrcoh::RunConfig& cfg) {
  cmd->add_option("--out", raw.out, "Write output to this file instead of stdout");
  cmd->add_option("--tolerance", raw.tolerance, "Override the 1e-9 gap tolerance");
  cmd->add_option("--seed", cfg.seed, "64-bit RNG seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlated coherence measures and monogamy checks"};
  app.require_subcommand(1);

  corrcoh::RunConfig cfg;
  RawFlags raw;

  auto* measure = app.add_subcommand("measure", "Print every applicable measure of one state as JSON");
  measure->add_option("--family", raw.family, "State family tag (phi_pe, psi_pe, ghzw, jiang, ...)");
  measure->add_option("--params", raw.params, "Comma-separated family parameters; complex as re:im");
  measure->add_option("--state-file", raw.state_file, "JSON state file");
  measure->add_option("--pivot", raw.pivot, "Pivot subsystem for the monogamy gap (0, 1, 2)");
  measure->add_option("--measure", raw.measure, "Restrict gap reports to one measure")
      ->check(CLI::IsMember({"l1", "re", "ire"}));
  measure->add_option("--dump-state", raw.dump_state, "Also write the loaded state to this file");
  add_common(measure, raw, cfg);

  auto* sweep = app.add_subcommand("sweep", "Monogamy gap M(p, eps) on a grid, as CSV");
  sweep->add_option("--family", raw.family, "phi_pe or psi_pe")->required();
  sweep->add_option("--grid-steps", cfg.grid_steps, "Points per axis (default 101)");
  sweep->add_option("--pivot", raw.pivot, "Pivot subsystem (default 0)");
  sweep->add_option("--measure", raw.measure, "Measure (default l1)")->check(CLI::IsMember({"l1", "re", "ire"}));
  add_common(sweep, raw, cfg);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite; nonzero exit on any failure");
  verify->add_option("--samples", cfg.samples, "Random states per check (default 1000)");
  verify->add_option("--state-file", raw.state_file, "Extra state file checked as a fixture");
  add_common(verify, raw, cfg);

  auto* search = app.add_subcommand("search", "Randomized search for l1 monogamy violations");
  search->add_option("--dims", raw.dims, "Three comma-separated dimensions (default 2,2,2)");
  search->add_option("--samples", cfg.samples, "Number of random states (default 1000)");
  search->add_flag("--mixed", cfg.mixed, "Sample Ginibre mixed states instead of Haar pure states");
  add_common(search, raw, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*measure) cfg.command = corrcoh::Command::Measure;
    if (*sweep) cfg.command = corrcoh::Command::Sweep;
    if (*verify) cfg.command = corrcoh::Command::Verify;
    if (*search) cfg.command = corrcoh::Command::Search;

    auto* active = app.get_subcommands().front();
    if (!raw.family.empty()) cfg.family = raw.family;
    if (!raw.state_file.empty()) cfg.state_file = raw.state_file;
    if (!raw.params.empty()) cfg.params = corrcoh::parse_params(raw.params);
    if (!raw.dims.empty()) cfg.dims = corrcoh::parse_dims_list(raw.dims);
    if (!raw.measure.empty()) cfg.measure = corrcoh::parse_measure_kind(raw.measure);
    if (!raw.out.empty()) cfg.output = raw.out;
    if (!raw.dump_state.empty()) cfg.dump_state = raw.dump_state;
    if (const auto* opt = active->get_option_no_throw("--pivot"); opt && opt->count()) cfg.pivot = raw.pivot;
    if (const auto* opt = active->get_option_no_throw("--tolerance"); opt && opt->count()) cfg.tolerance = raw.tolerance;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return corrcoh::kExitUsage;
  }

  return corrcoh::run_command(cfg, std::cout, std::cerr);
}
