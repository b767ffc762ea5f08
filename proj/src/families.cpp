#include "corrcoh/families.hpp"

#include <cmath>
#include <cstdio>

namespace corrcoh {

namespace {

constexpr double kAmplitudeNormTolerance = 1e-10;
const Dims kThreeQubits{2, 2, 2};

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw ParameterError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
}

template <std::size_t N>
void check_normalized(const std::array<Complex, N>& l) {
  double sum = 0.0;
  for (const auto& z : l) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParameterError("non-finite amplitude");
    sum += std::norm(z);
  }
  if (std::abs(sum - 1.0) > kAmplitudeNormTolerance)
    throw ParameterError("amplitudes not normalized: sum of squared moduli is " + std::to_string(sum));
}

// Index of the three-qubit label |a b c>.
constexpr Eigen::Index ket(int a, int b, int c) { return 4 * a + 2 * b + c; }

PureStateVector three_qubit(const std::vector<std::pair<Eigen::Index, Complex>>& terms) {
  Vector v = Vector::Zero(8);
  for (const auto& [idx, amp] : terms) v(idx) += amp;
  return PureStateVector(kThreeQubits, std::move(v));
}

template <std::size_t N>
std::array<Complex, N> to_complex(const std::array<double, N>& l) {
  std::array<Complex, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = l[k];
  return out;
}

template <std::size_t N>
std::array<Complex, N> take(const std::vector<Complex>& params) {
  std::array<Complex, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = params[k];
  return out;
}

double real_param(const Complex& z, const char* name) {
  if (z.imag() != 0.0) throw ParameterError(std::string(name) + " must be real");
  return z.real();
}

std::size_t arity(Family f) {
  switch (f) {
    case Family::ClassicalBits:
    case Family::BellPair: return 0;
    case Family::XInterpolation:
    case Family::JiangCounterexample:
    case Family::PhiPE:
    case Family::PsiPE: return 2;
    case Family::GHZW: return 5;
    case Family::AcinFour: return 4;
  }
  return 0;
}

}  // namespace

std::string family_tag(Family f) {
  switch (f) {
    case Family::ClassicalBits: return "classical_bits";
    case Family::BellPair: return "bell_pair";
    case Family::XInterpolation: return "x_interpolation";
    case Family::JiangCounterexample: return "jiang";
    case Family::GHZW: return "ghzw";
    case Family::PhiPE: return "phi_pe";
    case Family::PsiPE: return "psi_pe";
    case Family::AcinFour: return "acin_four";
  }
  return "unknown";
}

Family parse_family(const std::string& tag) {
  for (Family f : {Family::ClassicalBits, Family::BellPair, Family::XInterpolation, Family::JiangCounterexample,
                   Family::GHZW, Family::PhiPE, Family::PsiPE, Family::AcinFour})
    if (family_tag(f) == tag) return f;
  throw ParameterError("unknown family '" + tag + "'");
}

std::string FamilyParams::describe() const {
  std::string s = family_tag(family) + "(";
  char buf[64];
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k) s += ',';
    std::snprintf(buf, sizeof buf, "%.17g", params[k].real());
    s += buf;
    if (params[k].imag() != 0.0) {
      std::snprintf(buf, sizeof buf, ":%.17g", params[k].imag());
      s += buf;
    }
  }
  return s + ")";
}

DensityMatrix classical_bits() {
  Matrix m = Matrix::Zero(8, 8);
  m(ket(0, 0, 0), ket(0, 0, 0)) = 0.5;
  m(ket(1, 1, 1), ket(1, 1, 1)) = 0.5;
  return validate_density(MultipartiteOperator(kThreeQubits, std::move(m)));
}

PureStateVector bell_pair() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureStateVector({2, 2}, std::move(v));
}

PureStateVector x_interpolation(double x, int j) {
  check_unit_interval(x, "x");
  if (j != 0 && j != 1) throw ParameterError("j must be 0 or 1");
  const double y = std::sqrt(1.0 - x * x);
  Vector v = Vector::Zero(8);
  v(ket(0, 0, j)) += x;
  v(ket(1, 1, j)) += x;
  v(ket(0, j, 0)) += y;
  v(ket(1, j, 1)) += y;
  v /= v.norm();
  return PureStateVector(kThreeQubits, std::move(v));
}

PureStateVector jiang_counterexample(Complex a000, Complex a100) {
  check_normalized(std::array<Complex, 2>{a000, a100});
  return three_qubit({{ket(0, 0, 0), a000}, {ket(1, 0, 0), a100}});
}

PureStateVector ghzw(const std::array<Complex, 5>& l) {
  check_normalized(l);
  return three_qubit({{ket(0, 0, 0), l[0]},
                      {ket(0, 0, 1), l[1]},
                      {ket(0, 1, 0), l[2]},
                      {ket(1, 0, 0), l[3]},
                      {ket(1, 1, 1), l[4]}});
}

PureStateVector ghzw(const std::array<double, 5>& l) { return ghzw(to_complex(l)); }

PureStateVector phi_pe(double p, double eps) {
  check_unit_interval(p, "p");
  check_unit_interval(eps, "eps");
  const double side = std::sqrt((1.0 - p) / 2.0);
  return three_qubit({{ket(0, 0, 0), std::sqrt(p * eps)},
                      {ket(1, 1, 1), std::sqrt(p * (1.0 - eps))},
                      {ket(1, 1, 0), side},
                      {ket(1, 0, 1), side}});
}

PureStateVector psi_pe(double p, double eps) {
  check_unit_interval(p, "p");
  check_unit_interval(eps, "eps");
  const double side = std::sqrt((1.0 - p) / 2.0);
  return three_qubit({{ket(0, 0, 0), std::sqrt(p * eps)},
                      {ket(1, 1, 1), std::sqrt(p * (1.0 - eps))},
                      {ket(1, 0, 0), side},
                      {ket(0, 1, 1), side}});
}

PureStateVector acin_four(const std::array<Complex, 4>& l) {
  check_normalized(l);
  return three_qubit({{ket(0, 0, 0), l[0]}, {ket(0, 1, 1), l[1]}, {ket(1, 0, 0), l[2]}, {ket(1, 1, 1), l[3]}});
}

PureStateVector acin_four(const std::array<double, 4>& l) { return acin_four(to_complex(l)); }

DensityMatrix make_family(const FamilyParams& fp) {
  const auto& p = fp.params;
  if (p.size() != arity(fp.family))
    throw ParameterError(family_tag(fp.family) + " takes " + std::to_string(arity(fp.family)) + " parameters, got " +
                         std::to_string(p.size()));
  switch (fp.family) {
    case Family::ClassicalBits: return classical_bits();
    case Family::BellPair: return pure_to_density(bell_pair());
    case Family::XInterpolation: {
      const double j = real_param(p[1], "j");
      if (j != 0.0 && j != 1.0) throw ParameterError("j must be 0 or 1");
      return pure_to_density(x_interpolation(real_param(p[0], "x"), static_cast<int>(j)));
    }
    case Family::JiangCounterexample: return pure_to_density(jiang_counterexample(p[0], p[1]));
    case Family::GHZW: return pure_to_density(ghzw(take<5>(p)));
    case Family::PhiPE: return pure_to_density(phi_pe(real_param(p[0], "p"), real_param(p[1], "eps")));
    case Family::PsiPE: return pure_to_density(psi_pe(real_param(p[0], "p"), real_param(p[1], "eps")));
    case Family::AcinFour: return pure_to_density(acin_four(take<4>(p)));
  }
  throw ParameterError("unknown family");
}

}  // namespace corrcoh
