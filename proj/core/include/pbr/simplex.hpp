#pragma once

// Dense phase-one simplex for equality-constrained feasibility problems
//   find x ≥ 0 with A x = b.
// Bland's rule is used for both the entering and the leaving variable, so
// the method terminates on degenerate instances.

#include <cstddef>
#include <vector>

namespace pbr::lp {

struct EqualitySystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major rows × cols
  std::vector<double> b;  // rows

  double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

EqualitySystem make_system(std::size_t rows, std::size_t cols);

struct PhaseOneResult {
  /// Minimum of Σ|residual| over x ≥ 0, i.e. the L1 distance from b to the
  /// cone {A x : x ≥ 0}.
  double infeasibility = 0.0;
  /// Minimizer reached by the simplex; satisfies A x = b exactly when
  /// infeasibility is zero.
  std::vector<double> x;
  /// Optimal phase-one dual y with Aᵀy ≤ 0 and bᵀy = infeasibility. When
  /// infeasibility > 0 this is a Farkas certificate that no x ≥ 0 exists.
  std::vector<double> farkas;
  std::size_t pivots = 0;
};

PhaseOneResult phase_one(const EqualitySystem& system);

/// Rows of an irreducible infeasible subsystem, found with a deletion
/// filter: each row is dropped in turn and stays dropped if the rest is
/// still infeasible beyond tolerance. Empty when the system is feasible.
std::vector<std::size_t> irreducible_infeasible_rows(const EqualitySystem& system,
                                                     double tolerance);

/// The system restricted to the given rows.
EqualitySystem select_rows(const EqualitySystem& system, const std::vector<std::size_t>& rows);

/// max_i |(A x − b)_i|
double max_residual(const EqualitySystem& system, const std::vector<double>& x);

/// max_j (Aᵀ y)_j, which is ≤ 0 for a valid certificate.
double max_certificate_slack(const EqualitySystem& system, const std::vector<double>& y);

/// bᵀ y
double certificate_gap(const EqualitySystem& system, const std::vector<double>& y);

}  // namespace pbr::lp
