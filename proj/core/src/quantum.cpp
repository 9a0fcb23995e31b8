#include "pbr/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pbr/errors.hpp"
#include "pbr/tolerances.hpp"

namespace pbr {
namespace {

void require_finite(std::span<const Amplitude> amplitudes) {
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw NonFiniteError("amplitude is not finite");
    }
  }
}

void require_same_dim(const ComplexVector& a, const ComplexVector& b,
                      const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension " +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

ComplexVector::ComplexVector(std::vector<Amplitude> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DimensionError("vector dimension must be >= 1");
  require_finite(amplitudes_);
}

ComplexVector::ComplexVector(std::initializer_list<Amplitude> amplitudes)
    : ComplexVector(std::vector<Amplitude>(amplitudes)) {}

double ComplexVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

bool ComplexVector::is_normalized(double tolerance) const noexcept {
  return std::abs(norm_squared() - 1.0) <= tolerance;
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a, b, "sum");
  std::vector<Amplitude> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return ComplexVector(std::move(out));
}

ComplexVector operator*(Amplitude s, const ComplexVector& v) {
  std::vector<Amplitude> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
  return ComplexVector(std::move(out));
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  std::vector<Amplitude> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) out.push_back(x * y);
  }
  return ComplexVector(std::move(out));
}

Amplitude inner(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a, b, "inner product");
  Amplitude sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

ComplexVector normalize(const ComplexVector& v) {
  const double n2 = v.norm_squared();
  if (!(n2 > tol::kZero)) throw ZeroVectorError("cannot normalize a zero vector");
  return Amplitude{1.0 / std::sqrt(n2), 0.0} * v;
}

double max_abs_difference(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a, b, "difference");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

MeasurementBasis::MeasurementBasis(std::vector<ComplexVector> outcomes)
    : dim_(outcomes.empty() ? 0 : outcomes.front().dim()),
      outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw BasisError("basis has no outcomes");
  for (const auto& v : outcomes_) {
    if (v.dim() != dim_) throw DimensionError("basis outcomes differ in dimension");
  }
}

MeasurementBasis MeasurementBasis::checked(std::vector<ComplexVector> outcomes) {
  MeasurementBasis basis(std::move(outcomes));
  if (!is_orthonormal_basis(basis)) throw BasisError("outcomes are not an orthonormal basis");
  return basis;
}

std::vector<Amplitude> gram_matrix(const MeasurementBasis& basis) {
  const std::size_t n = basis.size();
  std::vector<Amplitude> gram(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i * n + j] = inner(basis[i], basis[j]);
  }
  return gram;
}

bool is_orthonormal_basis(const MeasurementBasis& basis, double tolerance) {
  if (basis.size() != basis.dim()) return false;
  const std::size_t n = basis.size();
  const auto gram = gram_matrix(basis);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      if (std::abs(gram[i * n + j] - delta) > tolerance) return false;
    }
  }
  return true;
}

bool is_orthonormal_basis(const MeasurementBasis& basis) {
  return is_orthonormal_basis(basis, tol::kNorm);
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw DomainError("empty outcome distribution");
  for (double p : probabilities_) {
    if (!std::isfinite(p)) throw NonFiniteError("probability is not finite");
    if (p < -tol::kProb) throw DomainError("negative probability");
  }
  if (std::abs(sum() - 1.0) > tol::kProb) {
    throw DomainError("probabilities do not sum to 1");
  }
}

double OutcomeDistribution::sum() const noexcept {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

OutcomeDistribution born_distribution(const ComplexVector& state,
                                      const MeasurementBasis& basis) {
  if (state.dim() != basis.dim()) {
    throw DimensionError("state dimension " + std::to_string(state.dim()) +
                         " does not match basis dimension " +
                         std::to_string(basis.dim()));
  }
  if (!is_orthonormal_basis(basis)) throw BasisError("basis is not orthonormal");
  if (!state.is_normalized(tol::kNorm)) throw DomainError("state is not normalized");

  std::vector<double> probabilities;
  probabilities.reserve(basis.size());
  for (const auto& outcome : basis.outcomes()) {
    probabilities.push_back(std::norm(inner(outcome, state)));
  }
  return OutcomeDistribution(std::move(probabilities));
}

}  // namespace pbr
