#include "corrcoh/monogamy.hpp"

#include <cmath>
#include <limits>

namespace corrcoh {

namespace {

constexpr double kIdentityTolerance = 1e-9;

double pair_cc(MeasureKind kind, const DensityMatrix& rho, std::size_t a, std::size_t b) {
  return correlated_coherence(kind, partial_trace(rho, SubsystemSelection({a, b})), Partition::singletons(2));
}

double marginal(MeasureKind kind, const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return coherence(kind, partial_trace(rho, SubsystemSelection(keep)));
}

// C(ABC) + C(A) + C(B) + C(C) - C(AB) - C(AC) - C(BC); both the monogamy gap
// and the tripartite trade-off gap reduce to this pivot-free expression.
double pivot_free_gap(MeasureKind kind, const DensityMatrix& rho) {
  return coherence(kind, rho) + marginal(kind, rho, {0}) + marginal(kind, rho, {1}) + marginal(kind, rho, {2}) -
         marginal(kind, rho, {0, 1}) - marginal(kind, rho, {0, 2}) - marginal(kind, rho, {1, 2});
}

void check_identity(double gap, double expected, const char* what) {
  if (std::abs(gap - expected) > kIdentityTolerance)
    throw NumericalIntegrityError(std::string(what) + ": gap " + std::to_string(gap) +
                                  " disagrees with its closed form " + std::to_string(expected));
}

double entropy_of(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return von_neumann_entropy(partial_trace(rho, SubsystemSelection(keep)));
}

}  // namespace

GapReport GapReport::make(std::string name, double lhs, double rhs, double tolerance, RelationType type) {
  GapReport r;
  r.relation_name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = lhs - rhs;
  r.tolerance = tolerance;
  r.type = type;
  r.passed = type == RelationType::Inequality ? r.gap >= -tolerance : std::abs(r.gap) <= tolerance;
  return r;
}

GapReport monogamy_gap(MeasureKind kind, const DensityMatrix& rho, std::size_t pivot, double tolerance) {
  require_tripartite(rho);
  if (pivot > 2) throw DimensionError("pivot must be 0, 1 or 2");
  std::size_t others[2];
  std::size_t n = 0;
  for (std::size_t k = 0; k < 3; ++k)
    if (k != pivot) others[n++] = k;

  auto ordered = [](std::size_t a, std::size_t b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  const auto [a1, b1] = ordered(pivot, others[0]);
  const auto [a2, b2] = ordered(pivot, others[1]);

  const double lhs = cut_correlated_coherence(kind, rho, pivot);
  const double rhs = pair_cc(kind, rho, a1, b1) + pair_cc(kind, rho, a2, b2);
  auto report = GapReport::make("monogamy[" + to_string(kind) + ",pivot=" + std::string(1, char('A' + pivot)) + "]",
                                lhs, rhs, tolerance, RelationType::Inequality);
  check_identity(report.gap, pivot_free_gap(kind, rho), "monogamy gap");
  return report;
}

GapReport tripartite_tradeoff_gap(MeasureKind kind, const DensityMatrix& rho, double tolerance) {
  require_tripartite(rho);
  const double lhs = correlated_coherence(kind, rho, Partition::singletons(3));
  const double rhs = pair_cc(kind, rho, 0, 1) + pair_cc(kind, rho, 0, 2) + pair_cc(kind, rho, 1, 2);
  auto report = GapReport::make("tripartite_tradeoff[" + to_string(kind) + "]", lhs, rhs, tolerance,
                                RelationType::Inequality);
  check_identity(report.gap, pivot_free_gap(kind, rho), "trade-off gap");
  return report;
}

GapReport weak_tradeoff_gap(const DensityMatrix& rho, double tolerance) {
  require_tripartite(rho);
  const auto kind = MeasureKind::L1;
  const double lhs = correlated_coherence(kind, rho, Partition::singletons(3));
  const double rhs = 0.5 * (pair_cc(kind, rho, 0, 1) + pair_cc(kind, rho, 0, 2) + pair_cc(kind, rho, 1, 2));
  return GapReport::make("weak_tradeoff[l1]", lhs, rhs, tolerance, RelationType::Inequality);
}

Theorem2Result theorem2_condition(const DensityMatrix& rho, std::size_t subsystem, double tolerance) {
  require_tripartite(rho);
  if (subsystem > 2) throw DimensionError("subsystem must be 0, 1 or 2");
  const Dims& dims = rho.dims();
  const Matrix& m = rho.matrix();
  const std::size_t strides[3] = {dims[1] * dims[2], dims[2], 1};

  // Labels of the two untouched subsystems, as flat-index offsets.
  std::vector<std::size_t> rest_offsets{0};
  for (std::size_t k = 0; k < 3; ++k) {
    if (k == subsystem) continue;
    std::vector<std::size_t> next;
    for (std::size_t base : rest_offsets)
      for (std::size_t v = 0; v < dims[k]; ++v) next.push_back(base + v * strides[k]);
    rest_offsets = std::move(next);
  }

  Theorem2Result r;
  const std::size_t d = dims[subsystem];
  const std::size_t stride = strides[subsystem];
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      if (i == l) continue;
      Complex sum{0.0, 0.0};
      for (std::size_t off : rest_offsets) {
        const Complex z = m(static_cast<Eigen::Index>(i * stride + off), static_cast<Eigen::Index>(l * stride + off));
        sum += z;
        r.sum_of_moduli += std::abs(z);
      }
      r.modulus_of_sums += std::abs(sum);
    }
  r.residual = r.sum_of_moduli - r.modulus_of_sums;
  r.holds = std::abs(r.residual) <= tolerance;
  return r;
}

std::pair<GapReport, GapReport> re_bound_check(const DensityMatrix& rho, const Partition& cut, double tolerance) {
  const double cc = correlated_coherence(MeasureKind::RelativeEntropy, rho, cut);
  const double mi = mutual_information(rho, cut);
  return {GapReport::make("re_correlated_nonnegative[" + cut.label() + "]", cc, 0.0, tolerance,
                          RelationType::Inequality),
          GapReport::make("re_correlated_below_mutual_information[" + cut.label() + "]", mi, cc, tolerance,
                          RelationType::Inequality)};
}

GapReport strong_subadditivity_gap(const DensityMatrix& rho, double tolerance) {
  require_tripartite(rho);
  const auto kind = MeasureKind::IntrinsicRelativeEntropy;
  const double lhs = correlated_coherence(kind, rho, Partition::singletons(3));
  const double rhs = pair_cc(kind, rho, 0, 1) + pair_cc(kind, rho, 0, 2);
  auto report = GapReport::make("strong_subadditivity[ire]", lhs, rhs, tolerance, RelationType::Inequality);
  const double entropic =
      entropy_of(rho, {0, 1}) + entropy_of(rho, {0, 2}) - von_neumann_entropy(rho) - entropy_of(rho, {0});
  check_identity(report.gap, entropic, "strong subadditivity gap");
  return report;
}

GapReport theorem5_check(const DensityMatrix& rho, const Partition& cut, double tolerance) {
  const double cc = correlated_coherence(MeasureKind::IntrinsicRelativeEntropy, rho, cut);
  const double mi = mutual_information(rho, cut);
  return GapReport::make("irecc_equals_mutual_information[" + cut.label() + "]", cc, mi, tolerance,
                         RelationType::Equality);
}

DensityMatrix search_sample(const Dims& dims, std::uint64_t sub_seed, bool pure) {
  if (pure) return pure_to_density(haar_random_pure(dims, sub_seed));
  return ginibre_random_mixed(dims, checked_side(dims), sub_seed);
}

SearchSummary conjecture_search(const Dims& dims, std::size_t samples, std::uint64_t seed, bool pure,
                                double tolerance) {
  if (dims.size() != 3) throw DimensionError("conjecture search needs three subsystems");
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  checked_side(dims);

  SearchSummary s;
  s.dims = dims;
  s.samples = samples;
  s.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const std::uint64_t sub = derive_seed(seed, k);
    const auto report = monogamy_gap(MeasureKind::L1, search_sample(dims, sub, pure), 0, tolerance);
    if (report.gap < -tolerance) ++s.violations;
    if (report.gap < s.min_gap) {
      s.min_gap = report.gap;
      s.argmin_seed = sub;
    }
  }
  return s;
}

}  // namespace corrcoh
