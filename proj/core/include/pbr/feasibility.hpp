#pragma once

// Decides whether an ontological model with fixed preparation distributions
// can reproduce target outcome statistics, by searching for a response
// function ξ(k | λ1, λ2) with a phase-one simplex.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbr/ontic.hpp"
#include "pbr/quantum.hpp"
#include "pbr/simplex.hpp"

namespace pbr {

struct FeasibilityProblem {
  std::vector<JointDistribution> preparations;
  std::vector<OutcomeDistribution> targets;
  /// Optional display names, one per preparation.
  std::vector<std::string> labels;
};

enum class FeasibilityStatus { Feasible, Infeasible };

std::string to_string(FeasibilityStatus status);

/// Farkas multipliers over the constraint rows. Rows are ordered as the
/// per-pair normalizations (pair index λ1·n + λ2) followed by the
/// (preparation, outcome) statistics rows. Only rows of an irreducible
/// infeasible subsystem carry non-zero multipliers.
struct InfeasibilityCertificate {
  std::vector<double> multipliers;
  std::vector<std::string> constraint_names;
  /// Rows of the irreducible infeasible subsystem.
  std::vector<std::size_t> core_rows;
  /// bᵀy, strictly positive for a valid certificate.
  double gap = 0.0;
  /// max_j (Aᵀy)_j, non-positive up to rounding for a valid certificate.
  double slack = 0.0;
};

struct FeasibilityVerdict {
  FeasibilityStatus status = FeasibilityStatus::Infeasible;
  std::optional<ResponseFunction> witness;
  std::optional<InfeasibilityCertificate> certificate;
  /// Infeasible only: the constraints of the irreducible infeasible subsystem.
  std::string violated_constraint;
  /// Feasible: max constraint residual of the witness. Infeasible: minimal
  /// total L1 violation over all response functions.
  double residual = 0.0;

  bool feasible() const noexcept { return status == FeasibilityStatus::Feasible; }
};

/// The constraint system behind feasibility(), one variable per
/// (pair, outcome) entry of the response table.
lp::EqualitySystem build_constraints(const FeasibilityProblem& problem);

/// Throws SpaceError when preparations are on different spaces and
/// DimensionError when the counts or outcome numbers disagree.
FeasibilityVerdict feasibility(const FeasibilityProblem& problem);

/// Names of the constraint rows, in build_constraints() order.
std::vector<std::string> constraint_names(const FeasibilityProblem& problem);

/// Max |predicted − target| over every preparation and outcome.
double witness_residual(const FeasibilityProblem& problem, const ResponseFunction& witness);

}  // namespace pbr
