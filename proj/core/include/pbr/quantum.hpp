#pragma once

// Small dense state-vector algebra: kets, tensor products, inner products and
// Born-rule outcome distributions over a measurement basis.
//
// Amplitudes are stored in lexicographic computational-basis order. For a
// product a ⊗ b the left factor is the most significant index, so two-qubit
// states are laid out as |00>, |01>, |10>, |11>.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pbr {

using Amplitude = std::complex<double>;

/// Finite-dimensional complex amplitude vector. Every component is finite.
class ComplexVector {
 public:
  explicit ComplexVector(std::vector<Amplitude> amplitudes);
  ComplexVector(std::initializer_list<Amplitude> amplitudes);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

  /// ⟨v|v⟩
  double norm_squared() const noexcept;
  /// |⟨v|v⟩ − 1| ≤ tolerance
  bool is_normalized(double tolerance) const noexcept;

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<Amplitude> amplitudes_;
};

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(Amplitude s, const ComplexVector& v);

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// ⟨a|b⟩, antilinear in the first argument.
Amplitude inner(const ComplexVector& a, const ComplexVector& b);

/// v / √⟨v|v⟩. Throws ZeroVectorError when ⟨v|v⟩ ≤ tol::kZero.
ComplexVector normalize(const ComplexVector& v);

/// Max entrywise distance |a_i − b_i|; dimensions must agree.
double max_abs_difference(const ComplexVector& a, const ComplexVector& b);

/// An ordered set of outcome vectors of equal dimension.
///
/// Construction only checks dimensions; use is_orthonormal_basis() (or the
/// checked factory) to confirm that the outcomes actually form a basis.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(std::vector<ComplexVector> outcomes);

  /// Throws BasisError unless the outcomes are a complete orthonormal set.
  static MeasurementBasis checked(std::vector<ComplexVector> outcomes);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return outcomes_.size(); }
  std::span<const ComplexVector> outcomes() const noexcept { return outcomes_; }
  const ComplexVector& operator[](std::size_t k) const { return outcomes_[k]; }

 private:
  std::size_t dim_;
  std::vector<ComplexVector> outcomes_;
};

/// Matrix of ⟨ξi|ξj⟩, row-major, size() × size().
std::vector<Amplitude> gram_matrix(const MeasurementBasis& basis);

/// True iff the outcome count equals the dimension and the Gram matrix is
/// within tolerance of the identity entrywise.
bool is_orthonormal_basis(const MeasurementBasis& basis, double tolerance);
bool is_orthonormal_basis(const MeasurementBasis& basis);

/// Born-rule probabilities, one per basis outcome.
///
/// Values are kept exactly as computed (not clipped), so a structural zero
/// shows up as a residual of order 1e-33 rather than as 0.0.
class OutcomeDistribution {
 public:
  /// Throws DomainError if any entry is below −tol::kProb or the entries do
  /// not sum to 1 within tol::kProb.
  explicit OutcomeDistribution(std::vector<double> probabilities);

  std::size_t size() const noexcept { return probabilities_.size(); }
  std::span<const double> probabilities() const noexcept { return probabilities_; }
  double operator[](std::size_t k) const { return probabilities_[k]; }
  double sum() const noexcept;

 private:
  std::vector<double> probabilities_;
};

/// P(k) = |⟨ξk|state⟩|².
///
/// Throws DimensionError on a dimension mismatch, BasisError if the basis is
/// not orthonormal and DomainError if the state is not normalized.
OutcomeDistribution born_distribution(const ComplexVector& state,
                                      const MeasurementBasis& basis);

}  // namespace pbr
