#include "corrcoh/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "corrcoh/families.hpp"
#include "corrcoh/io.hpp"
#include "corrcoh/monogamy.hpp"
#include "corrcoh/suite.hpp"

namespace corrcoh {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Output goes to cfg.output when given, otherwise to the supplied stream.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
    if (path) {
      file_.open(*path);
      if (!file_) throw UsageError("cannot open output file '" + *path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

struct LoadedState {
  DensityMatrix rho;
  std::string descriptor;
  std::optional<StateSpec> spec;
};

LoadedState load_state(const RunConfig& cfg) {
  if (cfg.family.has_value() == cfg.state_file.has_value())
    throw UsageError("exactly one of --family or --state-file is required");
  if (cfg.state_file) {
    auto spec = read_state_file(*cfg.state_file);
    auto rho = to_density(spec, cfg.tolerance.value_or(kDensityTolerance));
    return {std::move(rho), "file:" + *cfg.state_file, std::move(spec)};
  }
  const FamilyParams fp{parse_family(*cfg.family), cfg.params};
  return {make_family(fp), fp.describe(), std::nullopt};
}

std::string letters(std::initializer_list<std::size_t> ks) {
  std::string s;
  for (auto k : ks) s += static_cast<char>('A' + k);
  return s;
}

json all_measures(const DensityMatrix& rho) {
  return {{"l1", l1_coherence(rho)},
          {"re", relative_entropy_coherence(rho)},
          {"ire", intrinsic_re_coherence(rho)}};
}

json correlated_all(const DensityMatrix& rho, const Partition& part) {
  json j;
  for (auto kind : {MeasureKind::L1, MeasureKind::RelativeEntropy, MeasureKind::IntrinsicRelativeEntropy})
    j[to_string(kind)] = correlated_coherence(kind, rho, part);
  return j;
}

std::vector<MeasureKind> kinds_for(const RunConfig& cfg) {
  if (cfg.measure) return {*cfg.measure};
  return {MeasureKind::L1, MeasureKind::RelativeEntropy, MeasureKind::IntrinsicRelativeEntropy};
}

void write_state_dump(const std::string& path, const LoadedState& st) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open dump file '" + path + "'");
  json j;
  if (st.spec && std::holds_alternative<PureStateVector>(*st.spec))
    j = state_to_json(std::get<PureStateVector>(*st.spec));
  else
    j = state_to_json(st.rho.op());
  f << j.dump() << '\n';
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

std::vector<Complex> parse_params(const std::string& text) {
  std::vector<Complex> out;
  if (text.empty()) return out;
  for (const auto& tok : split(text, ',')) {
    const auto parts = split(tok, ':');
    if (parts.size() == 1)
      out.emplace_back(parse_double(parts[0]), 0.0);
    else if (parts.size() == 2)
      out.emplace_back(parse_double(parts[0]), parse_double(parts[1]));
    else
      throw UsageError("bad parameter '" + tok + "'");
  }
  return out;
}

Dims parse_dims_list(const std::string& text) {
  Dims dims;
  for (const auto& tok : split(text, ',')) {
    const double v = parse_double(tok);
    if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v)))
      throw UsageError("dims must be positive integers, got '" + tok + "'");
    dims.push_back(static_cast<std::size_t>(v));
  }
  if (dims.empty()) throw UsageError("empty dims");
  return dims;
}

int cmd_measure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto st = load_state(cfg);
    const DensityMatrix& rho = st.rho;
    const std::size_t n = rho.subsystems();
    if (cfg.pivot && n != 3)
      throw UsageError("--pivot needs a tripartite state, this one has " + std::to_string(n) + " subsystems");
    const std::size_t pivot = cfg.pivot.value_or(0);
    const double tol = cfg.tolerance.value_or(kGapTolerance);

    json j;
    j["state"] = st.descriptor;
    j["dims"] = rho.dims();
    j["von_neumann_entropy"] = von_neumann_entropy(rho);
    j["l1_coherence"] = l1_coherence(rho);
    j["relative_entropy_coherence"] = relative_entropy_coherence(rho);
    j["intrinsic_re_coherence"] = intrinsic_re_coherence(rho);

    if (n >= 2) {
      json cc = json::object();
      std::vector<Partition> parts{Partition::singletons(n)};
      if (n == 3)
        for (std::size_t k = 0; k < 3; ++k) parts.push_back(Partition::cut(3, k));
      for (const auto& part : parts) cc[part.label()] = correlated_all(rho, part);
      j["correlated_coherence"] = cc;
    }

    if (n == 2) j["mutual_information"] = {{"A|B", mutual_information(rho, Partition::singletons(2))}};

    if (n == 3) {
      json mi = json::object();
      for (std::size_t k = 0; k < 3; ++k) {
        const auto cut = Partition::cut(3, k);
        mi[cut.label()] = mutual_information(rho, cut);
      }
      j["mutual_information"] = mi;
      json pair_mi = json::object();
      for (auto [a, b] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}})
        pair_mi[letters({a, b})] = mutual_information(partial_trace(rho, {a, b}), Partition::singletons(2));
      j["pairwise_mutual_information"] = pair_mi;
      j["interaction_information"] = interaction_information(rho);
      j["marginals"] = {{"A", all_measures(partial_trace(rho, {0}))},
                        {"B", all_measures(partial_trace(rho, {1}))},
                        {"C", all_measures(partial_trace(rho, {2}))}};

      json mono = json::object(), trade = json::object();
      for (auto kind : kinds_for(cfg)) {
        auto m = monogamy_gap(kind, rho, pivot, tol);
        m.state_descriptor = st.descriptor;
        mono[to_string(kind)] = to_json(m);
        auto t = tripartite_tradeoff_gap(kind, rho, tol);
        t.state_descriptor = st.descriptor;
        trade[to_string(kind)] = to_json(t);
      }
      j["monogamy_gap"] = mono;
      j["tripartite_tradeoff_gap"] = trade;
      auto weak = weak_tradeoff_gap(rho, tol);
      weak.state_descriptor = st.descriptor;
      j["weak_tradeoff_gap"] = to_json(weak);
      auto ssa = strong_subadditivity_gap(rho, tol);
      ssa.state_descriptor = st.descriptor;
      j["strong_subadditivity_gap"] = to_json(ssa);
      json cond = json::object();
      for (std::size_t k = 0; k < 3; ++k) {
        const auto c = theorem2_condition(rho, k);
        cond[letters({k})] = {{"holds", c.holds},
                              {"modulus_of_sums", c.modulus_of_sums},
                              {"sum_of_moduli", c.sum_of_moduli},
                              {"residual", c.residual}};
      }
      j["theorem2_condition"] = cond;
    }

    if (cfg.dump_state) write_state_dump(*cfg.dump_state, st);

    Sink sink(cfg.output, out);
    sink.get() << j.dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.family) throw UsageError("sweep needs --family phi_pe or --family psi_pe");
    const Family fam = parse_family(*cfg.family);
    if (fam != Family::PhiPE && fam != Family::PsiPE)
      throw UsageError("sweep supports only phi_pe and psi_pe, got '" + *cfg.family + "'");
    if (cfg.grid_steps < 2) throw UsageError("--grid-steps must be at least 2");
    const auto kind = cfg.measure.value_or(MeasureKind::L1);
    const std::size_t pivot = cfg.pivot.value_or(0);
    const double denom = static_cast<double>(cfg.grid_steps - 1);

    Sink sink(cfg.output, out);
    auto& os = sink.get();
    os << "p,epsilon,M\n";
    for (std::size_t i = 0; i < cfg.grid_steps; ++i) {
      const double p = static_cast<double>(i) / denom;
      for (std::size_t k = 0; k < cfg.grid_steps; ++k) {
        const double eps = static_cast<double>(k) / denom;
        const auto psi = fam == Family::PhiPE ? phi_pe(p, eps) : psi_pe(p, eps);
        const double m = monogamy_gap(kind, pure_to_density(psi), pivot).gap;
        os << format_number(p) << ',' << format_number(eps) << ',' << format_number(m) << '\n';
      }
    }
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SuiteOptions opts;
    opts.samples = cfg.samples;
    opts.seed = cfg.seed;
    opts.tolerance = cfg.tolerance;
    if (cfg.state_file) opts.fixture_files.push_back(*cfg.state_file);
    const auto entries = run_verification_suite(opts);

    Sink sink(cfg.output, out);
    auto& os = sink.get();
    std::size_t failed = 0;
    os << std::left << std::setw(44) << "relation" << std::right << std::setw(8) << "checks" << std::setw(10)
       << "failures" << std::setw(26) << "worst_gap" << "  status\n";
    for (const auto& e : entries) {
      if (!e.passed()) ++failed;
      os << std::left << std::setw(44) << e.relation << std::right << std::setw(8) << e.checks << std::setw(10)
         << e.failures << std::setw(26) << format_number(e.worst_gap) << "  " << (e.passed() ? "PASS" : "FAIL")
         << '\n';
      if (!e.passed()) {
        os << "    at " << e.worst_descriptor << '\n';
        if (!e.note.empty()) os << "    " << e.note << '\n';
      }
    }
    os << "summary: " << entries.size() << " relations, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitFailure;
  });
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.dims.size() != 3) throw UsageError("--dims must list exactly three subsystem dimensions");
    if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
    const auto summary = conjecture_search(cfg.dims, cfg.samples, cfg.seed, !cfg.mixed,
                                           cfg.tolerance.value_or(kGapTolerance));
    Sink sink(cfg.output, out);
    sink.get() << to_json(summary).dump(2) << '\n';
    if (summary.violations > 0)
      err << "flagged: " << summary.violations << " monogamy violation(s); smallest gap reproduces with seed "
          << summary.argmin_seed << '\n';
    return kExitOk;
  });
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Measure: return cmd_measure(cfg, out, err);
    case Command::Sweep: return cmd_sweep(cfg, out, err);
    case Command::Verify: return cmd_verify(cfg, out, err);
    case Command::Search: return cmd_search(cfg, out, err);
  }
  return kExitUsage;
}

}  // namespace corrcoh
