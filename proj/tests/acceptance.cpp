// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corrcoh/families.hpp"
#include "corrcoh/monogamy.hpp"

using namespace corrcoh;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

DensityMatrix mixed(const Dims& dims, std::uint64_t seed) {
  return ginibre_random_mixed(dims, 1 + seed % checked_side(dims), seed);
}

template <std::size_t N>
std::array<Complex, N> random_amplitudes(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::array<Complex, N> l;
  double n = 0.0;
  for (auto& z : l) {
    z = {g(rng), g(rng)};
    n += std::norm(z);
  }
  for (auto& z : l) z /= std::sqrt(n);
  return l;
}

const MeasureKind kKinds[] = {MeasureKind::L1, MeasureKind::RelativeEntropy, MeasureKind::IntrinsicRelativeEntropy};

Outcome classical_bits_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto rho = classical_bits();
  const auto two = Partition::singletons(2);
  const double ab = mutual_information(partial_trace(rho, {0, 1}), two);
  const double ac = mutual_information(partial_trace(rho, {0, 2}), two);
  const double a_bc = mutual_information(rho, Partition::cut(3, 0));
  const double dt = seconds_since(t0);
  o.require(std::abs(ab - 1.0) <= 1e-10 && std::abs(ac - 1.0) <= 1e-10 && std::abs(a_bc - 1.0) <= 1e-10,
            "mutual informations off");
  o.require(ab + ac > a_bc, "I(A:B) + I(A:C) > I(A:BC) not reproduced");
  o.require(dt < 1e-3, "took " + fmt("%.3g s", dt));
  o.detail = o.pass ? "I(A:B)=" + fmt("%.12g", ab) + " I(A:C)=" + fmt("%.12g", ac) + " I(A:BC)=" +
                          fmt("%.12g", a_bc) + fmt(" in %.3g ms", dt * 1e3)
                    : o.detail;
  return o;
}

Outcome jiang_counterexample_check() {
  Outcome o;
  const double r = 1.0 / std::sqrt(2.0);
  const auto rho = pure_to_density(jiang_counterexample(r, r));
  const double whole = l1_coherence(rho);
  const double ab = l1_coherence(partial_trace(rho, {0, 1}));
  const double ac = l1_coherence(partial_trace(rho, {0, 2}));
  const double a = l1_coherence(partial_trace(rho, {0}));
  for (double v : {whole, ab, ac, a}) o.require(std::abs(v - 1.0) <= 1e-12, "coherence not 1.0");
  o.require(whole < ab + ac, "plain monogamy unexpectedly holds");
  const double gap = monogamy_gap(MeasureKind::L1, rho, 0).gap;
  o.require(std::abs(gap) <= 1e-12, "gap " + fmt("%.3g", gap));
  if (o.pass) o.detail = "C=1 for ABC,AB,AC,A; plain monogamy 1 < 2 fails; gap " + fmt("%.3g", gap);
  return o;
}

Outcome phi_surface() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i)
    for (int k = 0; k <= 100; ++k) {
      const double p = i / 100.0, e = k / 100.0;
      const double m = monogamy_gap(MeasureKind::L1, pure_to_density(phi_pe(p, e)), 0).gap;
      worst = std::max(worst, std::abs(m - 2.0 * p * std::sqrt(e * (1.0 - e))));
    }
  const double dt = seconds_since(t0);
  const double centre = monogamy_gap(MeasureKind::L1, pure_to_density(phi_pe(1.0, 0.5)), 0).gap;
  o.require(worst <= 1e-9, "max deviation " + fmt("%.3g", worst));
  o.require(std::abs(centre - 1.0) <= 1e-9, "M(1,0.5) = " + fmt("%.17g", centre));
  o.require(dt < 10.0, "grid took " + fmt("%.3g s", dt));
  if (o.pass) o.detail = "max |M - closed form| " + fmt("%.3g", worst) + fmt(", grid %.3g s", dt);
  return o;
}

Outcome psi_surface() {
  Outcome o;
  double min_gap = INFINITY;
  for (int i = 0; i <= 100; ++i)
    for (int k = 0; k <= 100; ++k)
      min_gap = std::min(min_gap, monogamy_gap(MeasureKind::L1, pure_to_density(psi_pe(i / 100.0, k / 100.0))).gap);
  o.require(min_gap >= -1e-9, "min gap " + fmt("%.3g", min_gap));
  for (double e : {0.0, 1.0}) {
    const double m = monogamy_gap(MeasureKind::L1, pure_to_density(psi_pe(1.0, e))).gap;
    o.require(std::abs(m) <= 1e-9, "boundary gap " + fmt("%.3g", m));
  }
  if (o.pass) o.detail = "grid min " + fmt("%.3g", min_gap) + ", boundaries 0";
  return o;
}

Outcome theorem1() {
  Outcome o;
  std::size_t states = 0, violations = 0;
  double worst = INFINITY;
  std::uint64_t salt = 0;
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 2, 2}, Dims{2, 3}, Dims{3, 3, 3}}) {
    ++salt;
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const auto rho = mixed(dims, derive_seed(salt, s));
      std::vector<Partition> parts{Partition::singletons(dims.size())};
      if (dims.size() == 3)
        for (std::size_t p = 0; p < 3; ++p) parts.push_back(Partition::cut(3, p));
      for (const auto& part : parts) {
        const double cc = correlated_coherence(MeasureKind::L1, rho, part);
        worst = std::min(worst, cc);
        if (cc < -1e-9) ++violations;
      }
      ++states;
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  if (o.pass) o.detail = std::to_string(states) + " states, min " + fmt("%.3g", worst);
  return o;
}

Outcome proven_families() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = INFINITY;
  std::size_t failed_condition = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto a = pure_to_density(ghzw(random_amplitudes<5>(rng)));
    const auto b = pure_to_density(phi_pe(u(rng), u(rng)));
    for (const auto* rho : {&a, &b}) {
      for (std::size_t k = 0; k < 3; ++k)
        if (!theorem2_condition(*rho, k).holds) ++failed_condition;
      worst = std::min(worst, tripartite_tradeoff_gap(MeasureKind::L1, *rho).gap);
    }
  }
  o.require(failed_condition == 0, std::to_string(failed_condition) + " condition failures");
  o.require(worst >= -1e-9, "min trade-off gap " + fmt("%.3g", worst));
  if (o.pass) o.detail = "2000 draws, condition holds, min trade-off gap " + fmt("%.3g", worst);
  return o;
}

Outcome weak_tradeoff() {
  Outcome o;
  double worst = INFINITY;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Dims dims = s % 2 ? Dims{2, 2, 2} : Dims{2, 3, 2};
    worst = std::min(worst, weak_tradeoff_gap(mixed(dims, derive_seed(77, s))).gap);
  }
  o.require(worst >= -1e-9, "min gap " + fmt("%.3g", worst));
  if (o.pass) o.detail = "1000 mixed states, min gap " + fmt("%.3g", worst);
  return o;
}

Outcome theorem4() {
  Outcome o;
  double worst_identity = 0.0, worst_pivot = 0.0;
  std::size_t evaluated = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Dims dims = s % 3 == 0 ? Dims{2, 2, 3} : Dims{2, 2, 2};
    const auto rho = s % 2 ? mixed(dims, derive_seed(88, s)) : pure_to_density(haar_random_pure(dims, derive_seed(88, s)));
    for (auto kind : kKinds) {
      const double tri = tripartite_tradeoff_gap(kind, rho).gap;
      const double first = monogamy_gap(kind, rho, 0).gap;
      for (std::size_t p = 0; p < 3; ++p) {
        const double g = monogamy_gap(kind, rho, p).gap;
        worst_identity = std::max(worst_identity, std::abs(g - tri));
        worst_pivot = std::max(worst_pivot, std::abs(g - first));
        ++evaluated;
      }
    }
  }
  o.require(worst_identity <= 1e-9, "identity deviation " + fmt("%.3g", worst_identity));
  o.require(worst_pivot <= 1e-9, "pivot deviation " + fmt("%.3g", worst_pivot));
  if (o.pass)
    o.detail = std::to_string(evaluated) + " gaps, identity " + fmt("%.3g", worst_identity) + ", pivot " +
               fmt("%.3g", worst_pivot);
  return o;
}

Outcome theorem5() {
  Outcome o;
  double worst = 0.0;
  std::uint64_t salt = 0;
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}}) {
    ++salt;
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const auto r = theorem5_check(mixed(dims, derive_seed(500 + salt, s)), Partition::singletons(2));
      worst = std::max(worst, std::abs(r.gap));
    }
  }
  o.require(worst <= 1e-9, "max deviation " + fmt("%.3g", worst));
  if (o.pass) o.detail = "3000 states, max |IRECC - I| " + fmt("%.3g", worst);
  return o;
}

Outcome theorem6() {
  Outcome o;
  double worst_ii = 0.0, worst_gap = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Dims dims = s % 4 == 0 ? Dims{2, 3, 2} : Dims{2, 2, 2};
    const auto rho = pure_to_density(haar_random_pure(dims, derive_seed(600, s)));
    worst_ii = std::max(worst_ii, std::abs(interaction_information(rho)));
    worst_gap = std::max(worst_gap, std::abs(monogamy_gap(MeasureKind::IntrinsicRelativeEntropy, rho, 0).gap));
  }
  o.require(worst_ii <= 1e-9, "interaction information " + fmt("%.3g", worst_ii));
  o.require(worst_gap <= 1e-9, "equality gap " + fmt("%.3g", worst_gap));
  if (o.pass) o.detail = "1000 pure states, |T| " + fmt("%.3g", worst_ii) + ", |gap| " + fmt("%.3g", worst_gap);
  return o;
}

Outcome bipartite_bounds_and_ssa() {
  Outcome o;
  double worst_lo = INFINITY, worst_hi = INFINITY, worst_ssa = INFINITY;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Dims dims = s % 2 ? Dims{2, 2} : Dims{2, 3};
    const auto [lo, hi] = re_bound_check(mixed(dims, derive_seed(700, s)), Partition::singletons(2));
    worst_lo = std::min(worst_lo, lo.gap);
    worst_hi = std::min(worst_hi, hi.gap);
    worst_ssa = std::min(worst_ssa, strong_subadditivity_gap(mixed({2, 2, 2}, derive_seed(701, s))).gap);
  }
  o.require(worst_lo >= -1e-9, "C^c_re below 0: " + fmt("%.3g", worst_lo));
  o.require(worst_hi >= -1e-9, "C^c_re above I: " + fmt("%.3g", worst_hi));
  o.require(worst_ssa >= -1e-9, "ssa gap " + fmt("%.3g", worst_ssa));
  if (o.pass)
    o.detail = "min gaps " + fmt("%.3g", worst_lo) + ", " + fmt("%.3g", worst_hi) + ", ssa " + fmt("%.3g", worst_ssa);
  return o;
}

Outcome conjecture_probe() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto small = conjecture_search({2, 2, 2}, 10000, 1, true);
  const auto large = conjecture_search({3, 3, 3}, 1000, 1, true);
  const double dt = seconds_since(t0);
  o.require(small.violations == 0, std::to_string(small.violations) + " violations on [2,2,2]");
  o.require(large.violations == 0, std::to_string(large.violations) + " violations on [3,3,3]");
  o.require(dt < 120.0, "took " + fmt("%.3g s", dt));
  if (o.pass)
    o.detail = "min gaps " + fmt("%.3g", small.min_gap) + " [2,2,2], " + fmt("%.3g", large.min_gap) +
               fmt(" [3,3,3] in %.3g s", dt);
  return o;
}

Outcome product_identities() {
  Outcome o;
  double worst_l1 = 0.0, worst_re = 0.0;
  const auto two = Partition::singletons(2);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto a = mixed({2 + s % 2}, derive_seed(900, s));
    const auto b = mixed({2 + (s / 2) % 2}, derive_seed(901, s));
    const auto rho = tensor_product(a, b);
    worst_l1 = std::max(worst_l1,
                        std::abs(correlated_coherence(MeasureKind::L1, rho, two) - l1_coherence(a) * l1_coherence(b)));
    worst_re = std::max(worst_re, std::abs(correlated_coherence(MeasureKind::RelativeEntropy, rho, two)));
  }
  o.require(worst_l1 <= 1e-10, "l1 factorization " + fmt("%.3g", worst_l1));
  o.require(worst_re <= 1e-9, "re product " + fmt("%.3g", worst_re));
  if (o.pass) o.detail = "200 pairs, l1 " + fmt("%.3g", worst_l1) + ", re " + fmt("%.3g", worst_re);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"classical bits mutual information", classical_bits_example},
      {"two-term counterexample", jiang_counterexample_check},
      {"phi surface closed form", phi_surface},
      {"psi surface nonnegative", psi_surface},
      {"l1 correlated coherence nonnegative", theorem1},
      {"proven families condition and trade-off", proven_families},
      {"weak trade-off on mixed states", weak_tradeoff},
      {"monogamy identity and pivot independence", theorem4},
      {"intrinsic correlated coherence equals mutual information", theorem5},
      {"pure-state interaction information and equality", theorem6},
      {"relative-entropy bounds and strong subadditivity", bipartite_bounds_and_ssa},
      {"monogamy conjecture probe", conjecture_probe},
      {"product identities", product_identities},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
