#pragma once

#include <string>
#include <vector>

#include "corrcoh/state.hpp"

namespace corrcoh {

enum class MeasureKind { L1, RelativeEntropy, IntrinsicRelativeEntropy };

std::string to_string(MeasureKind kind);

/// Accepts "l1", "re", "ire" (the CLI spellings).
MeasureKind parse_measure_kind(const std::string& tag);

/// Tolerance below zero tolerated before a measure is declared broken.
inline constexpr double kNegativityTolerance = 1e-9;

/// Disjoint blocks of subsystems covering all of them, at least two blocks.
class Partition {
 public:
  Partition(std::vector<SubsystemSelection> blocks, std::size_t subsystems);

  /// {0}, {1}, ..., {n-1}
  static Partition singletons(std::size_t subsystems);
  /// {pivot}, {everything else}
  static Partition cut(std::size_t subsystems, std::size_t pivot);

  const std::vector<SubsystemSelection>& blocks() const noexcept { return blocks_; }
  std::size_t subsystems() const noexcept { return n_; }

  /// "A|BC" style label, subsystems lettered from A.
  std::string label() const;

 private:
  std::vector<SubsystemSelection> blocks_;
  std::size_t n_;
};

/// Sum of moduli of the off-diagonal entries.
double l1_coherence(const DensityMatrix& rho);

/// S(dephase(rho)) - S(rho), in bits.
double relative_entropy_coherence(const DensityMatrix& rho);

/// Relative entropy to the maximally mixed state: log2 D - S(rho).
double intrinsic_re_coherence(const DensityMatrix& rho);

double coherence(MeasureKind kind, const DensityMatrix& rho);

/// Coherence of the whole minus the coherences of the marginals on each
/// block. For L1 a value below -kNegativityTolerance throws
/// NumericalIntegrityError (it is provably nonnegative).
double correlated_coherence(MeasureKind kind, const DensityMatrix& rho, const Partition& partition);

/// Correlated coherence across {pivot} | {rest} of a tripartite state:
/// C(rho) - C(rho_pivot) - C(rho_rest).
double cut_correlated_coherence(MeasureKind kind, const DensityMatrix& rho, std::size_t pivot);

/// S(X) + S(Y) - S(XY) across a two-block partition.
double mutual_information(const DensityMatrix& rho, const Partition& cut);

/// S(AB) + S(AC) + S(BC) - S(ABC) - S(A) - S(B) - S(C).
double interaction_information(const DensityMatrix& rho);

/// Throws DimensionError unless rho has exactly three subsystems.
void require_tripartite(const DensityMatrix& rho);

}  // namespace corrcoh
