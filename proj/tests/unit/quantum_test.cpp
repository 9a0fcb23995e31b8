#include "pbr/quantum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "pbr/errors.hpp"
#include "pbr/scenarios.hpp"
#include "random_models.hpp"

namespace pbr {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void expect_vector_near(const ComplexVector& v, std::initializer_list<Amplitude> expected,
                        double tol = 1e-15) {
  ASSERT_EQ(v.dim(), expected.size());
  std::size_t i = 0;
  for (const auto& e : expected) {
    EXPECT_NEAR(v[i].real(), e.real(), tol) << "index " << i;
    EXPECT_NEAR(v[i].imag(), e.imag(), tol) << "index " << i;
    ++i;
  }
}

TEST(ComplexVectorTest, RejectsNonFiniteAndEmpty) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW((ComplexVector{nan, 0.0}), NonFiniteError);
  EXPECT_THROW((ComplexVector{Amplitude{0.0, inf}}), NonFiniteError);
  EXPECT_THROW(ComplexVector(std::vector<Amplitude>{}), DimensionError);
}

TEST(TensorTest, ProductsOfBasisAndPlusKets) {
  const auto k0 = ket(KetLabel::Zero);
  const auto plus = ket(KetLabel::Plus);
  expect_vector_near(tensor(k0, k0), {1.0, 0.0, 0.0, 0.0});
  expect_vector_near(tensor(k0, plus), {kInvSqrt2, kInvSqrt2, 0.0, 0.0});
  expect_vector_near(tensor(plus, plus), {0.5, 0.5, 0.5, 0.5});
}

TEST(TensorTest, LeftFactorIsMostSignificant) {
  const auto v = tensor(ket(KetLabel::One), ket(KetLabel::Zero));
  expect_vector_near(v, {0.0, 0.0, 1.0, 0.0});
}

TEST(InnerTest, Examples) {
  EXPECT_EQ(inner(ket(KetLabel::Zero), ket(KetLabel::One)), Amplitude(0.0, 0.0));
  EXPECT_NEAR(inner(ket(KetLabel::Plus), ket(KetLabel::Zero)).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(inner(ket(KetLabel::Minus), ket(KetLabel::Plus))), 0.0, 1e-15);
}

TEST(InnerTest, ConjugatesTheLeftArgument) {
  const ComplexVector a{Amplitude{0.0, 1.0}};
  const ComplexVector b{Amplitude{1.0, 0.0}};
  EXPECT_EQ(inner(a, b), Amplitude(0.0, -1.0));
}

TEST(InnerTest, DimensionMismatch) {
  EXPECT_THROW(inner(ket(KetLabel::Zero), tensor(ket(KetLabel::Zero), ket(KetLabel::Zero))),
               DimensionError);
}

TEST(NormalizeTest, Examples) {
  expect_vector_near(normalize(ComplexVector{2.0, 0.0}), {1.0, 0.0});
  expect_vector_near(normalize(ComplexVector{1.0, 1.0, 1.0, 1.0}), {0.5, 0.5, 0.5, 0.5});

  // |0> + |+> has squared norm 2 + √2, so N² = √2 / (2√2 + 2).
  const auto raw = ket(KetLabel::Zero) + ket(KetLabel::Plus);
  const double n2 = std::numbers::sqrt2 / (2.0 * std::numbers::sqrt2 + 2.0);
  const double n = std::sqrt(n2);
  expect_vector_near(normalize(raw), {n * (1.0 + kInvSqrt2), n * kInvSqrt2}, 1e-15);
}

TEST(NormalizeTest, ZeroVector) {
  EXPECT_THROW(normalize(ComplexVector{0.0, 0.0}), ZeroVectorError);
  EXPECT_THROW(normalize(ComplexVector{1e-7, 0.0}), ZeroVectorError);
  EXPECT_NO_THROW(normalize(ComplexVector{1e-5, 0.0}));
}

TEST(BornDistributionTest, PbrZeros) {
  const auto basis = xi_basis();
  EXPECT_NEAR(born_distribution(product_preparation({DeviceState::Zero, DeviceState::Zero}), basis)[0],
              0.0, 1e-15);
  EXPECT_NEAR(born_distribution(product_preparation({DeviceState::Plus, DeviceState::Plus}), basis)[3],
              0.0, 1e-15);
}

TEST(BornDistributionTest, MachZehnderAllQuarter) {
  const auto dist = born_distribution(mz_joint_state(), xi_basis());
  for (double p : dist.probabilities()) {
    EXPECT_GT(p, 0.0);
    EXPECT_NEAR(p, 0.25, 1e-12);
  }
}

TEST(BornDistributionTest, Errors) {
  const auto basis = xi_basis();
  EXPECT_THROW(born_distribution(ket(KetLabel::Zero), basis), DimensionError);
  EXPECT_THROW(born_distribution(ComplexVector{1.0, 1.0, 0.0, 0.0}, basis), DomainError);
  const MeasurementBasis skewed({ket(KetLabel::Zero), ket(KetLabel::Plus)});
  EXPECT_THROW(born_distribution(ket(KetLabel::Zero), skewed), BasisError);
}

TEST(OrthonormalBasisTest, Examples) {
  std::vector<ComplexVector> computational;
  for (int i = 0; i < 4; ++i) {
    std::vector<Amplitude> a(4, 0.0);
    a[i] = 1.0;
    computational.emplace_back(a);
  }
  EXPECT_TRUE(is_orthonormal_basis(MeasurementBasis(computational)));
  EXPECT_TRUE(is_orthonormal_basis(xi_basis()));
  EXPECT_FALSE(is_orthonormal_basis(MeasurementBasis({ket(KetLabel::Zero), ket(KetLabel::Plus)})));
}

TEST(OrthonormalBasisTest, IncompleteSetIsNotABasis) {
  const MeasurementBasis partial({tensor(ket(KetLabel::Zero), ket(KetLabel::Zero))});
  EXPECT_FALSE(is_orthonormal_basis(partial));
  EXPECT_THROW(MeasurementBasis::checked({tensor(ket(KetLabel::Zero), ket(KetLabel::Zero))}),
               BasisError);
}

TEST(OutcomeDistributionTest, Validation) {
  EXPECT_NO_THROW(OutcomeDistribution({0.5, 0.5}));
  EXPECT_NO_THROW(OutcomeDistribution({-1e-12, 1.0}));
  EXPECT_THROW(OutcomeDistribution({-0.1, 1.1}), DomainError);
  EXPECT_THROW(OutcomeDistribution({0.5, 0.4}), DomainError);
}

// Properties over random vectors.

TEST(QuantumProperties, ConjugateSymmetry) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = testing_support::random_vector(rng, 4);
    const auto b = testing_support::random_vector(rng, 4);
    const auto ab = inner(a, b);
    const auto ba = inner(b, a);
    EXPECT_NEAR(ab.real(), ba.real(), 1e-12);
    EXPECT_NEAR(ab.imag(), -ba.imag(), 1e-12);
  }
}

TEST(QuantumProperties, TensorInnerFactorizes) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = testing_support::random_unit_vector(rng, 2);
    const auto b = testing_support::random_unit_vector(rng, 2);
    const auto c = testing_support::random_unit_vector(rng, 2);
    const auto d = testing_support::random_unit_vector(rng, 2);
    EXPECT_LE(std::abs(inner(tensor(a, b), tensor(c, d)) - inner(a, c) * inner(b, d)), 1e-12);
  }
}

TEST(QuantumProperties, BornSumsToOne) {
  std::mt19937_64 rng(13);
  const auto basis = xi_basis();
  for (int trial = 0; trial < 500; ++trial) {
    const auto state = testing_support::random_unit_vector(rng, 4);
    EXPECT_NEAR(born_distribution(state, basis).sum(), 1.0, 1e-12);
  }
}

TEST(QuantumProperties, NormalizeIsIdempotent) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const auto once = normalize(testing_support::random_vector(rng, 4));
    EXPECT_TRUE(once.is_normalized(1e-10));
    EXPECT_LE(max_abs_difference(normalize(once), once), 1e-10);
  }
}

}  // namespace
}  // namespace pbr
