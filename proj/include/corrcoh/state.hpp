#pragma once

// Dense multipartite operators and density matrices.
//
// Composite basis labels (i_1, ..., i_n) map to the flat index
// i_1*(d_2...d_n) + i_2*(d_3...d_n) + ... + i_n, i.e. the first subsystem is
// the most significant digit. Entropies are in bits throughout.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace corrcoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

/// Largest operator side accepted anywhere in the library.
inline constexpr std::size_t kMaxSide = 4096;

/// Default tolerance for the density-matrix invariants.
inline constexpr double kDensityTolerance = 1e-10;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad dims, side overflow, or a selection that does not fit the operator.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity left its mathematically allowed range.
class NumericalIntegrityError : public Error {
 public:
  using Error::Error;
};

enum class Invariant { Finiteness, Shape, Hermiticity, Trace, Positivity, Norm };

std::string to_string(Invariant inv);

/// Names the first violated invariant and how far off it is.
struct Diagnostic {
  Invariant invariant;
  double magnitude;

  std::string message() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(Diagnostic d);
  const Diagnostic& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

/// Product of dims, or DimensionError if any dim is zero, dims is empty, or
/// the product exceeds kMaxSide.
std::size_t checked_side(const Dims& dims);

/// Square complex matrix tagged with its subsystem dimensions.
class MultipartiteOperator {
 public:
  MultipartiteOperator(Dims dims, Matrix entries);

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return entries_; }
  std::size_t side() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t subsystems() const noexcept { return dims_.size(); }

 private:
  Dims dims_;
  Matrix entries_;
};

/// Validated MultipartiteOperator: Hermitian, unit trace, PSD (all within
/// kDensityTolerance). Only obtainable through validation or through
/// operations that preserve the invariants.
class DensityMatrix {
 public:
  const MultipartiteOperator& op() const noexcept { return op_; }
  const Dims& dims() const noexcept { return op_.dims(); }
  const Matrix& matrix() const noexcept { return op_.matrix(); }
  std::size_t side() const noexcept { return op_.side(); }
  std::size_t subsystems() const noexcept { return op_.subsystems(); }

 private:
  explicit DensityMatrix(MultipartiteOperator op) : op_(std::move(op)) {}

  friend class detail_access;
  MultipartiteOperator op_;
};

/// Normalized state vector tagged with subsystem dimensions.
class PureStateVector {
 public:
  /// Throws ValidationError (Norm) if | ||amplitudes|| - 1 | > tol.
  PureStateVector(Dims dims, Vector amplitudes, double tol = kDensityTolerance);

  const Dims& dims() const noexcept { return dims_; }
  const Vector& amplitudes() const noexcept { return amps_; }
  std::size_t subsystems() const noexcept { return dims_.size(); }

 private:
  Dims dims_;
  Vector amps_;
};

/// Strictly increasing, nonempty list of 0-based subsystem positions.
class SubsystemSelection {
 public:
  SubsystemSelection(std::vector<std::size_t> keep);
  SubsystemSelection(std::initializer_list<std::size_t> keep)
      : SubsystemSelection(std::vector<std::size_t>(keep)) {}

  const std::vector<std::size_t>& positions() const noexcept { return keep_; }
  std::size_t size() const noexcept { return keep_.size(); }
  bool contains(std::size_t pos) const;

  /// Throws DimensionError unless every position is below n.
  void check_fits(std::size_t n) const;

 private:
  std::vector<std::size_t> keep_;
};

// Diagnostics and validation.

/// Checks finiteness, Hermiticity, trace, and positivity in that order.
std::optional<Diagnostic> diagnose_density(const MultipartiteOperator& op,
                                           double tol = kDensityTolerance);

/// Returns the validated state or throws ValidationError.
DensityMatrix validate_density(const MultipartiteOperator& op, double tol = kDensityTolerance);

// Composition and marginals.

MultipartiteOperator tensor_product(const MultipartiteOperator& a, const MultipartiteOperator& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSelection& keep);

/// Zeroes every off-diagonal entry.
DensityMatrix dephase(const DensityMatrix& rho);

DensityMatrix pure_to_density(const PureStateVector& psi);

// Entropy.

/// -sum p log2 p over p > 1e-12.
double shannon_entropy(std::span<const double> probabilities);

/// Eigenvalues of the Hermitian matrix in ascending order; entries in
/// [-1e-10, 0) are clipped to zero, anything more negative throws
/// NumericalIntegrityError.
std::vector<double> spectrum(const DensityMatrix& rho);

double von_neumann_entropy(const DensityMatrix& rho);

// Random states. Generator: std::mt19937_64 seeded with the given 64-bit seed,
// Gaussians from std::normal_distribution<double>. Reproducible for a fixed
// build and seed.

PureStateVector haar_random_pure(const Dims& dims, std::uint64_t seed);
DensityMatrix ginibre_random_mixed(const Dims& dims, std::size_t rank, std::uint64_t seed);

/// Deterministic sub-seed for sample `index` of a run seeded with `seed`
/// (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Internal gateway used by library code that constructs states whose
/// invariants hold by construction. Not for general use.
class detail_access {
 public:
  static DensityMatrix trusted(MultipartiteOperator op) { return DensityMatrix(std::move(op)); }
};

}  // namespace corrcoh
