#pragma once

// Gap functionals for the monogamy and trade-off relations of correlated
// coherence, plus a randomized search over tripartite states.
//
// Every gap is lhs - rhs, reported raw. Inequalities pass when
// gap >= -tolerance, equalities when |gap| <= tolerance.

#include <cstdint>
#include <string>
#include <utility>

#include "corrcoh/coherence.hpp"

namespace corrcoh {

inline constexpr double kGapTolerance = 1e-9;
inline constexpr double kConditionTolerance = 1e-10;

enum class RelationType { Inequality, Equality };

struct GapReport {
  std::string relation_name;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tolerance = kGapTolerance;
  bool passed = false;
  std::string state_descriptor;
  RelationType type = RelationType::Inequality;

  static GapReport make(std::string name, double lhs, double rhs, double tolerance, RelationType type);
};

struct SearchSummary {
  std::size_t samples = 0;
  double min_gap = 0.0;
  std::uint64_t argmin_seed = 0;
  std::size_t violations = 0;
  Dims dims;
};

/// Q(pivot|rest) >= Q(pivot,other1) + Q(pivot,other2) for correlated
/// coherence Q of the given kind.
GapReport monogamy_gap(MeasureKind kind, const DensityMatrix& rho, std::size_t pivot = 0,
                       double tolerance = kGapTolerance);

/// C^c(ABC) >= C^c(AB) + C^c(AC) + C^c(BC).
GapReport tripartite_tradeoff_gap(MeasureKind kind, const DensityMatrix& rho, double tolerance = kGapTolerance);

/// C^c_l1(ABC) >= 1/2 (C^c_l1(AB) + C^c_l1(AC) + C^c_l1(BC)).
GapReport weak_tradeoff_gap(const DensityMatrix& rho, double tolerance = kGapTolerance);

struct Theorem2Result {
  bool holds = false;
  /// sum_{i!=l} |sum_rest rho_{(i,rest),(l,rest)}|, equal to C_l1 of the marginal.
  double modulus_of_sums = 0.0;
  /// sum_{i!=l} sum_rest |rho_{(i,rest),(l,rest)}|
  double sum_of_moduli = 0.0;
  /// sum_of_moduli - modulus_of_sums, never negative beyond rounding.
  double residual = 0.0;
};

/// Whether the l1 coherence of one marginal equals the sum of the moduli of
/// the contributing entries of the full state (no cancellation under the
/// partial trace).
Theorem2Result theorem2_condition(const DensityMatrix& rho, std::size_t subsystem,
                                  double tolerance = kConditionTolerance);

/// {C^c_re >= 0, I - C^c_re >= 0} across a bipartition.
std::pair<GapReport, GapReport> re_bound_check(const DensityMatrix& rho, const Partition& cut,
                                               double tolerance = kGapTolerance);

/// C^Ic(ABC) - C^Ic(AB) - C^Ic(AC) = S(AB) + S(AC) - S(ABC) - S(A) >= 0.
GapReport strong_subadditivity_gap(const DensityMatrix& rho, double tolerance = kGapTolerance);

/// Intrinsic correlated coherence across a bipartition equals the mutual
/// information.
GapReport theorem5_check(const DensityMatrix& rho, const Partition& cut, double tolerance = kGapTolerance);

/// Draws `samples` tripartite states (Haar pure, or full-rank Ginibre mixed
/// when pure is false) and evaluates the l1 monogamy gap with pivot 0.
/// Sample k uses derive_seed(seed, k); argmin_seed is that sub-seed.
SearchSummary conjecture_search(const Dims& dims, std::size_t samples, std::uint64_t seed, bool pure,
                                double tolerance = kGapTolerance);

/// The state conjecture_search evaluates for a given sub-seed.
DensityMatrix search_sample(const Dims& dims, std::uint64_t sub_seed, bool pure);

}  // namespace corrcoh
