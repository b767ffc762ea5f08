#include "corrcoh/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace corrcoh {

namespace {

constexpr double kEigenClip = 1e-10;
constexpr double kZeroEigen = 1e-12;

// Offsets into the full index space contributed by every joint label of the
// selected subsystems, enumerated big-endian over those subsystems.
std::vector<std::size_t> label_offsets(const Dims& dims, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) stride[k - 1] = stride[k] * dims[k];

  std::vector<std::size_t> offsets{0};
  for (std::size_t pos : positions) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[pos]);
    for (std::size_t base : offsets)
      for (std::size_t i = 0; i < dims[pos]; ++i) next.push_back(base + i * stride[pos]);
    offsets = std::move(next);
  }
  return offsets;
}

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index c = 0; c < g.cols(); ++c)
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(r, c) = Complex(re, im);
    }
  return g;
}

}  // namespace

std::string to_string(Invariant inv) {
  switch (inv) {
    case Invariant::Finiteness: return "finiteness";
    case Invariant::Shape: return "shape";
    case Invariant::Hermiticity: return "hermiticity";
    case Invariant::Trace: return "trace";
    case Invariant::Positivity: return "positivity";
    case Invariant::Norm: return "norm";
  }
  return "unknown";
}

std::string Diagnostic::message() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(invariant) << " violation, magnitude " << magnitude;
  return os.str();
}

ValidationError::ValidationError(Diagnostic d) : Error(d.message()), diag_(d) {}

std::size_t checked_side(const Dims& dims) {
  if (dims.empty()) throw DimensionError("at least one subsystem is required");
  std::size_t side = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionError("subsystem dimension must be positive");
    if (side > kMaxSide / d) throw DimensionError("operator side exceeds " + std::to_string(kMaxSide));
    side *= d;
  }
  return side;
}

MultipartiteOperator::MultipartiteOperator(Dims dims, Matrix entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  const std::size_t side = checked_side(dims_);
  if (entries_.rows() != entries_.cols())
    throw DimensionError("operator matrix is not square");
  if (static_cast<std::size_t>(entries_.rows()) != side)
    throw DimensionError("matrix side " + std::to_string(entries_.rows()) +
                         " does not match product of dims " + std::to_string(side));
}

PureStateVector::PureStateVector(Dims dims, Vector amplitudes, double tol)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  const std::size_t side = checked_side(dims_);
  if (static_cast<std::size_t>(amps_.size()) != side)
    throw DimensionError("vector length does not match product of dims");
  if (!amps_.allFinite()) throw ValidationError({Invariant::Finiteness, 0.0});
  const double off = std::abs(amps_.norm() - 1.0);
  if (off > tol) throw ValidationError({Invariant::Norm, off});
}

SubsystemSelection::SubsystemSelection(std::vector<std::size_t> keep) : keep_(std::move(keep)) {
  if (keep_.empty()) throw DimensionError("subsystem selection is empty");
  for (std::size_t k = 1; k < keep_.size(); ++k)
    if (keep_[k] <= keep_[k - 1])
      throw DimensionError("subsystem selection must be strictly increasing");
}

bool SubsystemSelection::contains(std::size_t pos) const {
  return std::binary_search(keep_.begin(), keep_.end(), pos);
}

void SubsystemSelection::check_fits(std::size_t n) const {
  if (keep_.back() >= n)
    throw DimensionError("subsystem position " + std::to_string(keep_.back()) + " out of range for " +
                         std::to_string(n) + " subsystems");
}

std::optional<Diagnostic> diagnose_density(const MultipartiteOperator& op, double tol) {
  const Matrix& m = op.matrix();
  if (!m.allFinite()) return Diagnostic{Invariant::Finiteness, 0.0};

  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) return Diagnostic{Invariant::Hermiticity, herm};

  const double trace_off = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_off > tol) return Diagnostic{Invariant::Trace, trace_off};

  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return Diagnostic{Invariant::Hermiticity, herm};
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol) return Diagnostic{Invariant::Positivity, -min_eig};

  return std::nullopt;
}

DensityMatrix validate_density(const MultipartiteOperator& op, double tol) {
  if (auto d = diagnose_density(op, tol)) throw ValidationError(*d);
  return detail_access::trusted(op);
}

MultipartiteOperator tensor_product(const MultipartiteOperator& a, const MultipartiteOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  checked_side(dims);
  Matrix k = Eigen::kroneckerProduct(a.matrix(), b.matrix());
  return MultipartiteOperator(std::move(dims), std::move(k));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return detail_access::trusted(tensor_product(a.op(), b.op()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSelection& keep) {
  const Dims& dims = rho.dims();
  keep.check_fits(dims.size());

  std::vector<std::size_t> traced;
  Dims kept_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (keep.contains(k))
      kept_dims.push_back(dims[k]);
    else
      traced.push_back(k);
  }

  const auto kept_off = label_offsets(dims, keep.positions());
  const auto traced_off = label_offsets(dims, traced);
  const auto n = static_cast<Eigen::Index>(kept_off.size());
  const Matrix& m = rho.matrix();

  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t t : traced_off)
        acc += m(static_cast<Eigen::Index>(kept_off[r] + t), static_cast<Eigen::Index>(kept_off[c] + t));
      out(r, c) = acc;
    }
  return detail_access::trusted(MultipartiteOperator(std::move(kept_dims), std::move(out)));
}

DensityMatrix dephase(const DensityMatrix& rho) {
  Matrix diag = rho.matrix().diagonal().asDiagonal();
  return detail_access::trusted(MultipartiteOperator(rho.dims(), std::move(diag)));
}

DensityMatrix pure_to_density(const PureStateVector& psi) {
  const double off = std::abs(psi.amplitudes().norm() - 1.0);
  if (off > 1e-8) throw ValidationError({Invariant::Norm, off});
  Matrix outer = psi.amplitudes() * psi.amplitudes().adjoint();
  return detail_access::trusted(MultipartiteOperator(psi.dims(), std::move(outer)));
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities)
    if (p > kZeroEigen) s -= p * std::log2(p);
  return s;
}

std::vector<double> spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalIntegrityError("eigendecomposition failed");
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  for (double& e : ev) {
    if (e < -kEigenClip)
      throw NumericalIntegrityError("eigenvalue " + std::to_string(e) + " below clipping threshold");
    if (e < 0.0) e = 0.0;
  }
  return ev;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto ev = spectrum(rho);
  return shannon_entropy(ev);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PureStateVector haar_random_pure(const Dims& dims, std::uint64_t seed) {
  const std::size_t side = checked_side(dims);
  Vector v = gaussian_matrix(side, 1, seed).col(0);
  v /= v.norm();
  return PureStateVector(dims, std::move(v));
}

DensityMatrix ginibre_random_mixed(const Dims& dims, std::size_t rank, std::uint64_t seed) {
  const std::size_t side = checked_side(dims);
  if (rank < 1 || rank > side)
    throw DimensionError("rank must lie in [1, " + std::to_string(side) + "]");
  const Matrix g = gaussian_matrix(side, rank, seed);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Hermitize exactly; the product is Hermitian only up to rounding.
  Matrix h = 0.5 * (rho + rho.adjoint());
  return detail_access::trusted(MultipartiteOperator(dims, std::move(h)));
}

}  // namespace corrcoh
