#include "doctest.h"

#include <cmath>

#include "corrcoh/coherence.hpp"
#include "corrcoh/families.hpp"
#include "oracle.hpp"

using namespace corrcoh;

namespace {

DensityMatrix ket(Dims dims, std::initializer_list<Complex> amps) {
  Vector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index k = 0;
  for (auto a : amps) v(k++) = a;
  return pure_to_density(PureStateVector(std::move(dims), v / v.norm()));
}

DensityMatrix diag(Dims dims, std::initializer_list<double> p) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(p.size()));
  Eigen::Index k = 0;
  for (auto x : p) d(k++) = x;
  return validate_density(MultipartiteOperator(std::move(dims), d.asDiagonal()));
}

Matrix random_unitary(Eigen::Index n, std::uint64_t seed) {
  // Q factor of a Ginibre matrix.
  const auto g = ginibre_random_mixed({static_cast<std::size_t>(n)}, static_cast<std::size_t>(n), seed).matrix();
  Eigen::HouseholderQR<Matrix> qr(g + Matrix::Identity(n, n) * Complex(0.1, 0.3));
  return qr.householderQ();
}

DensityMatrix conjugate(const DensityMatrix& rho, const Matrix& u) {
  Matrix m = u * rho.matrix() * u.adjoint();
  m = 0.5 * (m + m.adjoint());
  return validate_density(MultipartiteOperator(rho.dims(), m));
}

const auto kBell = [] { return ket({2, 2}, {1, 0, 0, 1}); };
const auto kPlus = [] { return ket({2}, {1, 1}); };

}  // namespace

TEST_CASE("Partition") {
  CHECK(Partition::singletons(3).label() == "A|B|C");
  CHECK(Partition::cut(3, 1).label() == "B|AC");
  CHECK_THROWS_AS(Partition({SubsystemSelection({0, 1, 2})}, 3), DimensionError);
  CHECK_THROWS_AS(Partition({SubsystemSelection({0, 1}), SubsystemSelection({1, 2})}, 3), DimensionError);
  CHECK_THROWS_AS(Partition({SubsystemSelection({0}), SubsystemSelection({1})}, 3), DimensionError);
  CHECK_THROWS_AS(Partition({SubsystemSelection({0}), SubsystemSelection({3})}, 3), DimensionError);
  CHECK_THROWS_AS(Partition::cut(1, 0), DimensionError);
}

TEST_CASE("parse_measure_kind") {
  CHECK(parse_measure_kind("l1") == MeasureKind::L1);
  CHECK(parse_measure_kind("re") == MeasureKind::RelativeEntropy);
  CHECK(parse_measure_kind("ire") == MeasureKind::IntrinsicRelativeEntropy);
  CHECK_THROWS(parse_measure_kind("l2"));
}

TEST_CASE("l1_coherence") {
  CHECK(l1_coherence(diag({3}, {0.2, 0.3, 0.5})) == 0.0);
  CHECK(std::abs(l1_coherence(kBell()) - 1.0) < 1e-15);

  SUBCASE("two-term state gives 2|a000 a100*|") {
    const Complex a000(0.6, 0.0), a100(0.0, 0.8);
    const auto rho = pure_to_density(jiang_counterexample(a000, a100));
    CHECK(std::abs(l1_coherence(rho) - 2.0 * std::abs(a000 * std::conj(a100))) < 1e-15);
  }
  SUBCASE("bounded by D - 1") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto rho = pure_to_density(haar_random_pure({2, 3}, s));
      CHECK(l1_coherence(rho) <= 5.0 + 1e-9);
      CHECK(l1_coherence(rho) == doctest::Approx(oracle::l1(rho.matrix())));
    }
  }
}

TEST_CASE("relative_entropy_coherence") {
  CHECK(std::abs(relative_entropy_coherence(diag({2, 2}, {0.1, 0.2, 0.3, 0.4}))) < 1e-12);
  CHECK(std::abs(relative_entropy_coherence(kPlus()) - 1.0) < 1e-12);
  CHECK(std::abs(relative_entropy_coherence(kBell()) - 1.0) < 1e-12);
  for (std::uint64_t s = 0; s < 50; ++s)
    CHECK(relative_entropy_coherence(ginibre_random_mixed({3, 2}, 1 + s % 6, s)) >= -1e-9);
}

TEST_CASE("intrinsic_re_coherence") {
  CHECK(std::abs(intrinsic_re_coherence(diag({2, 2}, {0.25, 0.25, 0.25, 0.25}))) < 1e-12);
  CHECK(std::abs(intrinsic_re_coherence(pure_to_density(haar_random_pure({2, 2}, 4))) - 2.0) < 1e-9);
  CHECK(std::abs(intrinsic_re_coherence(classical_bits()) - 2.0) < 1e-12);

  SUBCASE("basis independent, unlike l1") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const auto rho = ginibre_random_mixed({2, 3}, 1 + s % 6, s);
      const auto rotated = conjugate(rho, random_unitary(6, s + 500));
      CHECK(std::abs(intrinsic_re_coherence(rotated) - intrinsic_re_coherence(rho)) < 1e-9);
    }
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    const auto to_zero = conjugate(kPlus(), h);
    CHECK(std::abs(l1_coherence(to_zero) - l1_coherence(kPlus())) > 0.1);
    CHECK(std::abs(intrinsic_re_coherence(to_zero) - intrinsic_re_coherence(kPlus())) < 1e-9);
  }
}

TEST_CASE("correlated_coherence") {
  const auto ab = Partition::singletons(2);

  SUBCASE("incoherent product vanishes for every kind") {
    const auto rho = tensor_product(diag({2}, {0.3, 0.7}), diag({3}, {0.2, 0.3, 0.5}));
    CHECK(std::abs(correlated_coherence(MeasureKind::L1, rho, ab)) < 1e-12);
    CHECK(std::abs(correlated_coherence(MeasureKind::RelativeEntropy, rho, ab)) < 1e-9);
  }
  SUBCASE("l1 of |+>|+> is the product of local coherences") {
    const auto rho = tensor_product(kPlus(), kPlus());
    CHECK(std::abs(correlated_coherence(MeasureKind::L1, rho, ab) - 1.0) < 1e-12);
  }
  SUBCASE("product identities on random factors") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto a = ginibre_random_mixed({2 + s % 2}, 1 + s % 2, s);
      const auto b = ginibre_random_mixed({3}, 1 + s % 3, s + 77);
      const auto rho = tensor_product(a, b);
      CHECK(std::abs(correlated_coherence(MeasureKind::L1, rho, ab) - l1_coherence(a) * l1_coherence(b)) < 1e-10);
      CHECK(std::abs(correlated_coherence(MeasureKind::RelativeEntropy, rho, ab)) < 1e-9);
    }
  }
  SUBCASE("l1 nonnegative over random states and partitions, matching the loop oracle") {
    for (const Dims& dims : {Dims{2, 2}, Dims{2, 2, 2}, Dims{2, 3}, Dims{3, 3}}) {
      for (std::uint64_t s = 0; s < 250; ++s) {
        const auto rho = ginibre_random_mixed(dims, 1 + s % checked_side(dims), derive_seed(s, dims.size()));
        std::vector<Partition> parts{Partition::singletons(dims.size())};
        if (dims.size() == 3)
          for (std::size_t p = 0; p < 3; ++p) parts.push_back(Partition::cut(3, p));
        for (const auto& part : parts) {
          const double cc = correlated_coherence(MeasureKind::L1, rho, part);
          CHECK(cc >= -1e-9);
          double ref = oracle::l1(rho.matrix());
          for (const auto& b : part.blocks())
            ref -= oracle::l1(oracle::partial_trace(rho.matrix(), dims, b.positions()));
          CHECK(std::abs(cc - ref) < 1e-12);
        }
      }
    }
  }
  SUBCASE("separable mixtures are nonnegative") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      Matrix acc = Matrix::Zero(4, 4);
      for (std::uint64_t t = 0; t < 3; ++t) {
        const double w = (t + 1) / 6.0;
        acc += w * tensor_product(ginibre_random_mixed({2}, 1 + t % 2, derive_seed(s, 2 * t)),
                                  ginibre_random_mixed({2}, 1 + s % 2, derive_seed(s, 2 * t + 1)))
                       .matrix();
      }
      const auto rho = validate_density(MultipartiteOperator({2, 2}, acc));
      CHECK(correlated_coherence(MeasureKind::L1, rho, ab) >= -1e-9);
    }
  }
  SUBCASE("relative-entropy version lies between zero and the mutual information") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const auto rho = ginibre_random_mixed({2, 3}, 1 + s % 6, s);
      const double cc = correlated_coherence(MeasureKind::RelativeEntropy, rho, ab);
      CHECK(cc >= -1e-9);
      CHECK(cc <= mutual_information(rho, ab) + 1e-9);
    }
  }
  SUBCASE("intrinsic version equals mutual information") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const auto rho = ginibre_random_mixed({3, 3}, 1 + s % 9, s);
      CHECK(std::abs(correlated_coherence(MeasureKind::IntrinsicRelativeEntropy, rho, ab) -
                     mutual_information(rho, ab)) < 1e-9);
    }
  }
  SUBCASE("partition must match the state") {
    CHECK_THROWS_AS(correlated_coherence(MeasureKind::L1, kBell(), Partition::singletons(3)), DimensionError);
  }
}

TEST_CASE("mutual_information") {
  const auto ab = Partition::singletons(2);
  CHECK(std::abs(mutual_information(tensor_product(kPlus(), diag({2}, {0.4, 0.6})), ab)) < 1e-9);
  CHECK(std::abs(mutual_information(kBell(), ab) - 2.0) < 1e-12);
  CHECK(std::abs(mutual_information(classical_bits(), Partition::cut(3, 0)) - 1.0) < 1e-12);
  CHECK_THROWS_AS(mutual_information(classical_bits(), Partition::singletons(3)), DimensionError);
}

TEST_CASE("interaction_information") {
  for (std::uint64_t s = 0; s < 50; ++s)
    CHECK(std::abs(interaction_information(pure_to_density(haar_random_pure({2, 3, 2}, s)))) < 1e-9);
  const auto product = tensor_product(tensor_product(ginibre_random_mixed({2}, 2, 1), ginibre_random_mixed({2}, 2, 2)),
                                      ginibre_random_mixed({3}, 3, 3));
  CHECK(std::abs(interaction_information(product)) < 1e-9);
  CHECK(std::abs(interaction_information(classical_bits()) + 1.0) < 1e-12);
  CHECK_THROWS_AS(interaction_information(kBell()), DimensionError);
}

TEST_CASE("cut_correlated_coherence") {
  SUBCASE("intrinsic kind equals the mutual information across the cut") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto rho = ginibre_random_mixed({2, 2, 3}, 1 + s % 12, s);
      for (std::size_t p = 0; p < 3; ++p)
        CHECK(std::abs(cut_correlated_coherence(MeasureKind::IntrinsicRelativeEntropy, rho, p) -
                       mutual_information(rho, Partition::cut(3, p))) < 1e-9);
    }
  }
  SUBCASE("product state, relative entropy") {
    const auto rho = tensor_product(tensor_product(kPlus(), ginibre_random_mixed({2}, 2, 5)), kPlus());
    CHECK(std::abs(cut_correlated_coherence(MeasureKind::RelativeEntropy, rho, 0)) < 1e-9);
  }
  SUBCASE("two-term state, l1, pivot A") {
    const auto rho = pure_to_density(jiang_counterexample(0.6, 0.8));
    CHECK(std::abs(cut_correlated_coherence(MeasureKind::L1, rho, 0)) < 1e-12);
  }
  CHECK_THROWS_AS(cut_correlated_coherence(MeasureKind::L1, kBell(), 0), DimensionError);
}
