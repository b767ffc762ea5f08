#pragma once

// Named three-qubit (and two-qubit) states used throughout the monogamy
// analysis. Every constructor is a deterministic function of its parameters.

#include <array>
#include <string>
#include <vector>

#include "corrcoh/state.hpp"

namespace corrcoh {

/// Bad family parameter: out of range, wrong count, or not normalized.
class ParameterError : public Error {
 public:
  using Error::Error;
};

enum class Family { ClassicalBits, BellPair, XInterpolation, JiangCounterexample, GHZW, PhiPE, PsiPE, AcinFour };

/// CLI tag of a family ("classical_bits", "bell_pair", "x_interpolation",
/// "jiang", "ghzw", "phi_pe", "psi_pe", "acin_four").
std::string family_tag(Family f);
Family parse_family(const std::string& tag);

/// Family plus its printed parameters. Real parameters (p, eps, x, j) are
/// stored as the real part of a complex entry.
struct FamilyParams {
  Family family;
  std::vector<Complex> params;

  /// "phi_pe(0.5,0.25)" style descriptor with 17 significant digits.
  std::string describe() const;
};

/// 1/2 (|000><000| + |111><111|)
DensityMatrix classical_bits();

/// (|00> + |11>)/sqrt(2)
PureStateVector bell_pair();

/// x (|00>_AB + |11>_AB)|j>_C + sqrt(1-x^2) (|00>_AC + |11>_AC)|j>_B, divided
/// by its norm. x in [0,1], j in {0,1}.
PureStateVector x_interpolation(double x, int j);

/// a000|000> + a100|100>
PureStateVector jiang_counterexample(Complex a000, Complex a100);

/// l1|000> + l2|001> + l3|010> + l4|100> + l5|111>
PureStateVector ghzw(const std::array<Complex, 5>& l);
PureStateVector ghzw(const std::array<double, 5>& l);

/// sqrt(p eps)|000> + sqrt(p(1-eps))|111> + sqrt((1-p)/2)(|110> + |101>)
PureStateVector phi_pe(double p, double eps);

/// sqrt(p eps)|000> + sqrt(p(1-eps))|111> + sqrt((1-p)/2)(|100> + |011>)
PureStateVector psi_pe(double p, double eps);

/// l1|000> + l2|011> + l3|100> + l4|111>
PureStateVector acin_four(const std::array<Complex, 4>& l);
PureStateVector acin_four(const std::array<double, 4>& l);

/// Builds the named family from its parameter list.
DensityMatrix make_family(const FamilyParams& fp);

}  // namespace corrcoh
