#include "corrcoh/suite.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "corrcoh/families.hpp"
#include "corrcoh/io.hpp"

namespace corrcoh {

namespace {

double adversity(const GapReport& r) {
  return r.type == RelationType::Inequality ? -r.gap : std::abs(r.gap);
}

std::string seed_descriptor(const Dims& dims, std::uint64_t seed, const char* ensemble) {
  std::string s = std::string(ensemble) + "[";
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
  return s + "] seed=" + std::to_string(seed);
}

// All partitions with at least two blocks of up to three subsystems.
std::vector<Partition> partitions_of(std::size_t n) {
  if (n == 2) return {Partition::singletons(2)};
  if (n == 3) return {Partition::singletons(3), Partition::cut(3, 0), Partition::cut(3, 1), Partition::cut(3, 2)};
  return {Partition::singletons(n)};
}

class Runner {
 public:
  explicit Runner(const SuiteOptions& opts) : opts_(opts), tol_(opts.tolerance.value_or(kGapTolerance)) {}

  std::vector<SuiteEntry> run() {
    fixtures();
    theorem1();
    product_identities();
    separable_mixtures();
    proven_families();
    theorem4_identity();
    weak_tradeoff();
    bipartite_bounds();
    strong_subadditivity();
    theorem6();
    for (const auto& path : opts_.fixture_files) user_fixture(path);
    return std::move(entries_);
  }

 private:
  SuiteEntry& entry(const std::string& name) {
    for (auto& e : entries_)
      if (e.relation == name) return e;
    SuiteEntry e;
    e.relation = name;
    entries_.push_back(std::move(e));
    return entries_.back();
  }

  // Runs fn, recording its reports under `name`; exceptions count as failures.
  void check(const std::string& name, const std::string& descriptor,
             const std::function<std::vector<GapReport>()>& fn) {
    auto& e = entry(name);
    try {
      for (auto r : fn()) {
        r.state_descriptor = descriptor;
        e.record(r);
      }
    } catch (const std::exception& ex) {
      e.record_error(descriptor, ex.what());
    }
  }

  std::uint64_t stream(std::uint64_t salt) const { return derive_seed(opts_.seed, salt); }

  DensityMatrix random_mixed(const Dims& dims, std::uint64_t seed) const {
    const std::size_t side = checked_side(dims);
    return ginibre_random_mixed(dims, 1 + seed % side, seed);
  }

  void fixtures() {
    const auto bits = classical_bits();
    check("fixture_classical_bits_mutual_information", "classical_bits", [&] {
      const auto ab = partial_trace(bits, {0, 1});
      const auto ac = partial_trace(bits, {0, 2});
      return std::vector{
          GapReport::make("I(A:B)", mutual_information(ab, Partition::singletons(2)), 1.0, 1e-10, RelationType::Equality),
          GapReport::make("I(A:C)", mutual_information(ac, Partition::singletons(2)), 1.0, 1e-10, RelationType::Equality),
          GapReport::make("I(A:BC)", mutual_information(bits, Partition::cut(3, 0)), 1.0, 1e-10,
                          RelationType::Equality)};
    });

    const double h = 1.0 / std::sqrt(2.0);
    const auto jiang = pure_to_density(jiang_counterexample(h, h));
    check("fixture_jiang_counterexample", "jiang(1/sqrt2,1/sqrt2)", [&] {
      const double whole = l1_coherence(jiang);
      const double pairs = l1_coherence(partial_trace(jiang, {0, 1})) + l1_coherence(partial_trace(jiang, {0, 2}));
      // The plain-coherence inequality fails by exactly one unit here.
      return std::vector{GapReport::make("plain_l1_deficit", whole - pairs, -1.0, 1e-12, RelationType::Equality),
                         GapReport::make("monogamy_gap_zero", monogamy_gap(MeasureKind::L1, jiang).gap, 0.0, 1e-12,
                                         RelationType::Equality)};
    });

    for (std::size_t i = 0; i <= 100; i += 5)
      for (std::size_t j = 0; j <= 100; j += 5) {
        const double p = i / 100.0, eps = j / 100.0;
        const FamilyParams fp{Family::PhiPE, {p, eps}};
        check("fixture_phi_pe_closed_form", fp.describe(), [&] {
          const auto rho = make_family(fp);
          return std::vector{GapReport::make("phi_pe_M", monogamy_gap(MeasureKind::L1, rho).gap,
                                             2.0 * p * std::sqrt(eps * (1.0 - eps)), tol_, RelationType::Equality)};
        });
        const FamilyParams fq{Family::PsiPE, {p, eps}};
        check("fixture_psi_pe_nonnegative", fq.describe(),
              [&] { return std::vector{monogamy_gap(MeasureKind::L1, make_family(fq), 0, tol_)}; });
      }
  }

  void theorem1() {
    const std::uint64_t base = stream(1);
    std::size_t idx = 0;
    for (const Dims& dims : {Dims{2, 2}, Dims{2, 2, 2}, Dims{2, 3}, Dims{3, 3}})
      for (std::size_t k = 0; k < opts_.samples; ++k) {
        const std::uint64_t s = derive_seed(base, idx++);
        check("theorem1_l1_correlated_nonnegative", seed_descriptor(dims, s, "ginibre"), [&] {
          const auto rho = random_mixed(dims, s);
          std::vector<GapReport> out;
          for (const auto& part : partitions_of(dims.size()))
            out.push_back(GapReport::make("C^c_l1[" + part.label() + "]",
                                          correlated_coherence(MeasureKind::L1, rho, part), 0.0, tol_,
                                          RelationType::Inequality));
          return out;
        });
      }
  }

  void product_identities() {
    const std::uint64_t base = stream(2);
    for (std::size_t k = 0; k < opts_.samples; ++k) {
      const std::uint64_t s = derive_seed(base, k);
      const Dims da{2 + s % 2}, db{2 + (s >> 1) % 2};
      const auto a = random_mixed(da, derive_seed(s, 0));
      const auto b = random_mixed(db, derive_seed(s, 1));
      const auto ab = tensor_product(a, b);
      const auto desc = "product seed=" + std::to_string(s);
      check("l1_product_factorization", desc, [&] {
        return std::vector{GapReport::make("C^c_l1(a x b) = C_l1(a) C_l1(b)",
                                           correlated_coherence(MeasureKind::L1, ab, Partition::singletons(2)),
                                           l1_coherence(a) * l1_coherence(b), 1e-10, RelationType::Equality)};
      });
      check("re_product_zero", desc, [&] {
        return std::vector{GapReport::make("C^c_re(a x b) = 0",
                                           correlated_coherence(MeasureKind::RelativeEntropy, ab,
                                                                Partition::singletons(2)),
                                           0.0, tol_, RelationType::Equality)};
      });
    }
  }

  void separable_mixtures() {
    const std::uint64_t base = stream(3);
    for (std::size_t k = 0; k < opts_.samples; ++k) {
      const std::uint64_t s = derive_seed(base, k);
      check("l1_separable_mixture_nonnegative", "separable seed=" + std::to_string(s), [&] {
        std::mt19937_64 gen(s);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const std::size_t terms = 1 + s % 4;
        Matrix acc = Matrix::Zero(6, 6);
        double total = 0.0;
        for (std::size_t t = 0; t < terms; ++t) {
          const double w = unif(gen);
          total += w;
          acc += w * tensor_product(random_mixed({2}, derive_seed(s, 2 * t)), random_mixed({3}, derive_seed(s, 2 * t + 1)))
                         .matrix();
        }
        const auto rho = validate_density(MultipartiteOperator({2, 3}, acc / total));
        return std::vector{GapReport::make("C^c_l1", correlated_coherence(MeasureKind::L1, rho, Partition::singletons(2)),
                                           0.0, tol_, RelationType::Inequality)};
      });
    }
  }

  void proven_families() {
    const std::uint64_t base = stream(4);
    for (std::size_t k = 0; k < opts_.samples; ++k) {
      const std::uint64_t s = derive_seed(base, k);
      std::mt19937_64 gen(s);
      std::normal_distribution<double> normal;
      std::uniform_real_distribution<double> unif(0.0, 1.0);

      FamilyParams ghz{Family::GHZW, {}};
      double norm = 0.0;
      for (int i = 0; i < 5; ++i) {
        const double re = normal(gen);
        const double im = normal(gen);
        ghz.params.emplace_back(re, im);
        norm += std::norm(ghz.params.back());
      }
      for (auto& z : ghz.params) z /= std::sqrt(norm);
      const double p = unif(gen);
      const double eps = unif(gen);
      const FamilyParams phi{Family::PhiPE, {p, eps}};

      for (const auto& fp : {ghz, phi}) {
        const auto rho = make_family(fp);
        check("theorem2_condition_holds", fp.describe(), [&] {
          std::vector<GapReport> out;
          for (std::size_t sub = 0; sub < 3; ++sub) {
            const auto c = theorem2_condition(rho, sub);
            out.push_back(GapReport::make("residual[" + std::string(1, char('A' + sub)) + "]", c.residual, 0.0,
                                          kConditionTolerance, RelationType::Equality));
          }
          return out;
        });
        check("theorem2_monogamy", fp.describe(),
              [&] { return std::vector{monogamy_gap(MeasureKind::L1, rho, 0, tol_)}; });
        check("theorem3_tradeoff", fp.describe(),
              [&] { return std::vector{tripartite_tradeoff_gap(MeasureKind::L1, rho, tol_)}; });
      }
    }
  }

  void theorem4_identity() {
    const std::uint64_t base = stream(5);
    std::size_t idx = 0;
    for (const Dims& dims : {Dims{2, 2, 2}, Dims{2, 3, 2}})
      for (std::size_t k = 0; k < opts_.samples / 2 + 1; ++k) {
        const std::uint64_t s = derive_seed(base, idx++);
        check("theorem4_identity", seed_descriptor(dims, s, "ginibre"), [&] {
          const auto rho = random_mixed(dims, s);
          std::vector<GapReport> out;
          for (auto kind : {MeasureKind::L1, MeasureKind::RelativeEntropy, MeasureKind::IntrinsicRelativeEntropy}) {
            const double trade = tripartite_tradeoff_gap(kind, rho, tol_).gap;
            for (std::size_t pivot = 0; pivot < 3; ++pivot)
              out.push_back(GapReport::make("monogamy-tradeoff[" + to_string(kind) + "]",
                                            monogamy_gap(kind, rho, pivot, tol_).gap, trade, tol_,
                                            RelationType::Equality));
          }
          return out;
        });
      }
  }

  void weak_tradeoff() {
    const std::uint64_t base = stream(6);
    for (std::size_t k = 0; k < opts_.samples; ++k) {
      const std::uint64_t s = derive_seed(base, k);
      const Dims dims{2, 2, 2};
      check("weak_tradeoff", seed_descriptor(dims, s, "ginibre"),
            [&] { return std::vector{weak_tradeoff_gap(random_mixed(dims, s), tol_)}; });
    }
  }

  void bipartite_bounds() {
    const std::uint64_t base = stream(7);
    std::size_t idx = 0;
    for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}})
      for (std::size_t k = 0; k < opts_.samples; ++k) {
        const std::uint64_t s = derive_seed(base, idx++);
        const auto desc = seed_descriptor(dims, s, "ginibre");
        const auto cut = Partition::singletons(2);
        check("re_correlated_bounds", desc, [&] {
          const auto [lo, hi] = re_bound_check(random_mixed(dims, s), cut, tol_);
          return std::vector{lo, hi};
        });
        check("theorem5_irecc_equals_mutual_information", desc,
              [&] { return std::vector{theorem5_check(random_mixed(dims, s), cut, tol_)}; });
      }
  }

  void strong_subadditivity() {
    const std::uint64_t base = stream(8);
    for (std::size_t k = 0; k < opts_.samples; ++k) {
      const std::uint64_t s = derive_seed(base, k);
      const Dims dims = k % 2 ? Dims{2, 2, 2} : Dims{2, 3, 2};
      check("strong_subadditivity", seed_descriptor(dims, s, "ginibre"),
            [&] { return std::vector{strong_subadditivity_gap(random_mixed(dims, s), tol_)}; });
    }
  }

  void theorem6() {
    const std::uint64_t base = stream(9);
    for (std::size_t k = 0; k < opts_.samples; ++k) {
      const std::uint64_t s = derive_seed(base, k);
      const Dims dims = k % 3 == 0 ? Dims{2, 2, 2} : (k % 3 == 1 ? Dims{2, 3, 2} : Dims{3, 3, 3});
      check("theorem6_pure_irecc_equality", seed_descriptor(dims, s, "haar"), [&] {
        const auto rho = pure_to_density(haar_random_pure(dims, s));
        auto trade = tripartite_tradeoff_gap(MeasureKind::IntrinsicRelativeEntropy, rho, tol_);
        auto mono = monogamy_gap(MeasureKind::IntrinsicRelativeEntropy, rho, 0, tol_);
        return std::vector{
            GapReport::make("interaction_information", interaction_information(rho), 0.0, tol_, RelationType::Equality),
            GapReport::make(trade.relation_name, trade.lhs, trade.rhs, tol_, RelationType::Equality),
            GapReport::make(mono.relation_name, mono.lhs, mono.rhs, tol_, RelationType::Equality)};
      });
    }
  }

  void user_fixture(const std::string& path) {
    const std::string desc = "file:" + path;
    std::optional<DensityMatrix> rho;
    try {
      rho = to_density(read_state_file(path));
    } catch (const std::exception& ex) {
      entry("fixture_file_validation").record_error(desc, ex.what());
      return;
    }
    entry("fixture_file_validation").record(GapReport::make("valid", 0.0, 0.0, 0.0, RelationType::Equality));
    const std::size_t n = rho->subsystems();
    if (n < 2) return;
    check("fixture_file_theorem1", desc, [&] {
      std::vector<GapReport> out;
      for (const auto& part : partitions_of(n))
        out.push_back(GapReport::make("C^c_l1[" + part.label() + "]",
                                      correlated_coherence(MeasureKind::L1, *rho, part), 0.0, tol_,
                                      RelationType::Inequality));
      return out;
    });
    if (n == 2) {
      check("fixture_file_re_bounds", desc, [&] {
        const auto [lo, hi] = re_bound_check(*rho, Partition::singletons(2), tol_);
        return std::vector{lo, hi, theorem5_check(*rho, Partition::singletons(2), tol_)};
      });
    }
    if (n == 3) {
      check("fixture_file_tripartite", desc, [&] {
        return std::vector{weak_tradeoff_gap(*rho, tol_), strong_subadditivity_gap(*rho, tol_)};
      });
    }
  }

  const SuiteOptions& opts_;
  double tol_;
  std::vector<SuiteEntry> entries_;
};

}  // namespace

void SuiteEntry::record(const GapReport& r) {
  ++checks;
  if (!r.passed) ++failures;
  const double adv = adversity(r);
  if (adv > worst_adversity) {
    worst_adversity = adv;
    worst_gap = r.gap;
    worst_descriptor = r.state_descriptor;
  }
}

void SuiteEntry::record_error(const std::string& descriptor, const std::string& message) {
  ++checks;
  ++failures;
  if (note.empty()) {
    note = message;
    worst_descriptor = descriptor;
  }
}

std::vector<SuiteEntry> run_verification_suite(const SuiteOptions& opts) { return Runner(opts).run(); }

}  // namespace corrcoh
