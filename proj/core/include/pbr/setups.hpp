#pragma once

// The two experimental setups as ontological-model problems.
//
// Distinguishable setup: each device announces (via a which-way record)
// whether it emitted |0> or |+>, so the four product preparations are
// separate preparations, each with its own Born row as target.
//
// Indistinguishable setup: each device recombines both branches and emits
// N(|0> + |+>) with no record. Its preparation distribution over λ is the
// unannounced even mixture ½μ0 + ½μ1, and the only target is the Born row
// of ψ ⊗ ψ.

#include <cstddef>
#include <utility>

#include "pbr/feasibility.hpp"
#include "pbr/ontic.hpp"
#include "pbr/sampling.hpp"
#include "pbr/scenarios.hpp"

namespace pbr {

/// The four zero constraints with device index 0 for |0> and 1 for |+>.
ZeroPairing pbr_zero_pairing();

FeasibilityProblem pbr_problem(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1);

EpistemicDistribution mz_device_distribution(const EpistemicDistribution& mu0,
                                             const EpistemicDistribution& mu1);

FeasibilityProblem mz_problem(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1);

/// Distributions with total-variation overlap exactly q on n states:
///   μ0 = (1−q)·point(0)   + q·uniform(Δ)
///   μ1 = (1−q)·point(n−1) + q·uniform(Δ)
/// with Δ = {1, …, n−2} for n ≥ 3 and Δ = {0, 1} for n = 2. For n = 1 only
/// q = 1 is representable. Throws DomainError otherwise.
std::pair<EpistemicDistribution, EpistemicDistribution> overlap_pair(std::size_t lambda_size,
                                                                     double q);

/// Ontic space {"0", "+"} in which λ is the prepared state itself.
OnticSpace psi_ontic_space();

/// ξ(k | λ1, λ2) = Born probability of outcome k for |λ1> ⊗ |λ2>.
ResponseFunction psi_ontic_response();

/// ψ-ontic model of one preparation: point masses at the prepared states.
OnticModel psi_ontic_model(PreparationLabel label);

/// Mach-Zehnder devices with mixture distributions and the constant
/// response equal to the Born row of ψ ⊗ ψ.
OnticModel mz_constant_model(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1);

}  // namespace pbr
