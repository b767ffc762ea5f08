#include "corrcoh/coherence.hpp"

#include <cmath>

namespace corrcoh {

namespace {

void check_nonnegative(double value, const char* what) {
  if (value < -kNegativityTolerance)
    throw NumericalIntegrityError(std::string(what) + " is negative: " + std::to_string(value));
}

std::vector<double> diagonal_probabilities(const DensityMatrix& rho) {
  const auto d = rho.matrix().diagonal();
  std::vector<double> p(static_cast<std::size_t>(d.size()));
  for (Eigen::Index k = 0; k < d.size(); ++k) p[static_cast<std::size_t>(k)] = d(k).real();
  return p;
}

}  // namespace

std::string to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::L1: return "l1";
    case MeasureKind::RelativeEntropy: return "re";
    case MeasureKind::IntrinsicRelativeEntropy: return "ire";
  }
  return "unknown";
}

MeasureKind parse_measure_kind(const std::string& tag) {
  if (tag == "l1") return MeasureKind::L1;
  if (tag == "re") return MeasureKind::RelativeEntropy;
  if (tag == "ire") return MeasureKind::IntrinsicRelativeEntropy;
  throw std::invalid_argument("unknown measure '" + tag + "' (expected l1, re or ire)");
}

Partition::Partition(std::vector<SubsystemSelection> blocks, std::size_t subsystems)
    : blocks_(std::move(blocks)), n_(subsystems) {
  if (blocks_.size() < 2) throw DimensionError("a partition needs at least two blocks");
  std::vector<int> seen(n_, 0);
  for (const auto& b : blocks_) {
    b.check_fits(n_);
    for (std::size_t p : b.positions())
      if (seen[p]++) throw DimensionError("partition blocks overlap at subsystem " + std::to_string(p));
  }
  for (std::size_t p = 0; p < n_; ++p)
    if (!seen[p]) throw DimensionError("partition does not cover subsystem " + std::to_string(p));
}

Partition Partition::singletons(std::size_t subsystems) {
  std::vector<SubsystemSelection> blocks;
  for (std::size_t k = 0; k < subsystems; ++k) blocks.emplace_back(std::vector<std::size_t>{k});
  return Partition(std::move(blocks), subsystems);
}

Partition Partition::cut(std::size_t subsystems, std::size_t pivot) {
  if (pivot >= subsystems) throw DimensionError("pivot out of range");
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < subsystems; ++k)
    if (k != pivot) rest.push_back(k);
  if (rest.empty()) throw DimensionError("a cut needs at least two subsystems");
  return Partition({SubsystemSelection({pivot}), SubsystemSelection(std::move(rest))}, subsystems);
}

std::string Partition::label() const {
  std::string s;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += '|';
    for (std::size_t p : blocks_[b].positions()) s += static_cast<char>('A' + p);
  }
  return s;
}

double l1_coherence(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  double sum = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != c) sum += std::abs(m(r, c));
  return sum;
}

double relative_entropy_coherence(const DensityMatrix& rho) {
  const auto p = diagonal_probabilities(rho);
  const double value = shannon_entropy(p) - von_neumann_entropy(rho);
  check_nonnegative(value, "relative entropy of coherence");
  return value;
}

double intrinsic_re_coherence(const DensityMatrix& rho) {
  const double value = std::log2(static_cast<double>(rho.side())) - von_neumann_entropy(rho);
  check_nonnegative(value, "intrinsic relative entropy of coherence");
  return value;
}

double coherence(MeasureKind kind, const DensityMatrix& rho) {
  switch (kind) {
    case MeasureKind::L1: return l1_coherence(rho);
    case MeasureKind::RelativeEntropy: return relative_entropy_coherence(rho);
    case MeasureKind::IntrinsicRelativeEntropy: return intrinsic_re_coherence(rho);
  }
  throw std::invalid_argument("unknown measure kind");
}

double correlated_coherence(MeasureKind kind, const DensityMatrix& rho, const Partition& partition) {
  if (partition.subsystems() != rho.subsystems())
    throw DimensionError("partition does not match the state's subsystem count");
  double value = coherence(kind, rho);
  for (const auto& block : partition.blocks()) value -= coherence(kind, partial_trace(rho, block));
  if (kind == MeasureKind::L1) check_nonnegative(value, "l1 correlated coherence");
  return value;
}

void require_tripartite(const DensityMatrix& rho) {
  if (rho.subsystems() != 3)
    throw DimensionError("expected a tripartite state, got " + std::to_string(rho.subsystems()) +
                         " subsystems");
}

double cut_correlated_coherence(MeasureKind kind, const DensityMatrix& rho, std::size_t pivot) {
  require_tripartite(rho);
  return correlated_coherence(kind, rho, Partition::cut(3, pivot));
}

double mutual_information(const DensityMatrix& rho, const Partition& cut) {
  if (cut.blocks().size() != 2) throw DimensionError("mutual information needs a bipartition");
  if (cut.subsystems() != rho.subsystems())
    throw DimensionError("partition does not match the state's subsystem count");
  const double value = von_neumann_entropy(partial_trace(rho, cut.blocks()[0])) +
                       von_neumann_entropy(partial_trace(rho, cut.blocks()[1])) - von_neumann_entropy(rho);
  check_nonnegative(value, "mutual information");
  return value;
}

double interaction_information(const DensityMatrix& rho) {
  require_tripartite(rho);
  auto s = [&](std::initializer_list<std::size_t> keep) {
    return von_neumann_entropy(partial_trace(rho, SubsystemSelection(keep)));
  };
  return s({0, 1}) + s({0, 2}) + s({1, 2}) - von_neumann_entropy(rho) - s({0}) - s({1}) - s({2});
}

}  // namespace corrcoh
