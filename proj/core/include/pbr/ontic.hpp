#pragma once

// Finite ontological models: discrete ontic spaces, epistemic distributions
// over them, their overlap, preparation-independent joints and response
// functions of a two-system measurement.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pbr {

/// Finite set of ontic states λ, identified by their labels.
class OnticSpace {
 public:
  /// Labels "l0", "l1", ...
  explicit OnticSpace(std::size_t size);
  explicit OnticSpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  friend bool operator==(const OnticSpace&, const OnticSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Probability mass function μ(λ) over an ontic space.
class EpistemicDistribution {
 public:
  /// Throws DimensionError on a size mismatch and DomainError on negative
  /// mass or a total that differs from 1 by more than tol::kProb.
  EpistemicDistribution(OnticSpace space, std::vector<double> mass);

  static EpistemicDistribution point(OnticSpace space, std::size_t index);
  static EpistemicDistribution uniform(OnticSpace space);

  const OnticSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return mass_.size(); }
  std::span<const double> mass() const noexcept { return mass_; }
  double operator[](std::size_t i) const { return mass_[i]; }

  /// Indices with mass above tol::kZero.
  std::vector<std::size_t> support() const;

  /// weight·a + (1 − weight)·b on the same space.
  static EpistemicDistribution mixture(const EpistemicDistribution& a,
                                       const EpistemicDistribution& b,
                                       double weight);

 private:
  OnticSpace space_;
  std::vector<double> mass_;
};

struct OverlapReport {
  /// Δ: states where both distributions exceed tol::kZero.
  std::vector<std::size_t> overlap_states;
  /// Σλ min(μ0(λ), μ1(λ)), i.e. one minus the total variation distance.
  double q = 0.0;
};

/// Throws SpaceError if the distributions live on different spaces.
OverlapReport overlap(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1);

/// Distribution over ordered pairs (λ1, λ2) of one ontic space; the pair
/// index is λ1·n + λ2.
class JointDistribution {
 public:
  JointDistribution(OnticSpace space, std::vector<double> mass);

  const OnticSpace& space() const noexcept { return space_; }
  std::size_t pair_count() const noexcept { return mass_.size(); }
  std::span<const double> mass() const noexcept { return mass_; }
  double at(std::size_t lambda1, std::size_t lambda2) const;

  EpistemicDistribution marginal_first() const;
  EpistemicDistribution marginal_second() const;

 private:
  OnticSpace space_;
  std::vector<double> mass_;
};

/// Product measure of two independently prepared systems.
JointDistribution joint(const EpistemicDistribution& mu_a, const EpistemicDistribution& mu_b);

/// ξ(k | λ1, λ2): outcome probabilities for every ordered pair of ontic
/// states. Row-major with pair index λ1·n + λ2.
class ResponseFunction {
 public:
  /// Throws on negative entries (below −tol::kProb) or a row whose sum
  /// differs from 1 by more than tol::kProb.
  ResponseFunction(OnticSpace space, std::size_t outcome_count, std::vector<double> table);

  /// ξ(k | ·) = probabilities[k] for every pair.
  static ResponseFunction constant(OnticSpace space, std::span<const double> probabilities);

  const OnticSpace& space() const noexcept { return space_; }
  std::size_t outcome_count() const noexcept { return outcome_count_; }
  std::size_t pair_count() const noexcept { return space_.size() * space_.size(); }
  std::span<const double> table() const noexcept { return table_; }
  std::span<const double> row(std::size_t lambda1, std::size_t lambda2) const;
  double at(std::size_t lambda1, std::size_t lambda2, std::size_t outcome) const;

 private:
  OnticSpace space_;
  std::size_t outcome_count_;
  std::vector<double> table_;
};

/// Outcome distribution a model predicts for one joint preparation:
/// P(k) = Σ joint(λ1,λ2)·ξ(k|λ1,λ2).
std::vector<double> predicted_statistics(const JointDistribution& prep,
                                         const ResponseFunction& response);

/// "Preparation (device1, device2) never yields outcome". Devices index the
/// pair {mu0, mu1} handed to pbr_contradiction().
struct ZeroConstraint {
  std::size_t device1;
  std::size_t device2;
  std::size_t outcome;
};

struct ZeroPairing {
  std::size_t outcome_count;
  std::vector<ZeroConstraint> constraints;
};

/// Pairs (λ1, λ2) at which every outcome is forbidden: each outcome has a
/// zero constraint whose preparation puts positive mass on the pair.
std::vector<std::pair<std::size_t, std::size_t>> forced_contradictions(
    const EpistemicDistribution& mu0, const EpistemicDistribution& mu1,
    const ZeroPairing& pairing);

/// True iff some reachable pair must respond with total probability 0, so no
/// response function can reproduce the zero constraints. For the four-way
/// PBR pairing this is exactly overlap(mu0, mu1).q > 0.
bool pbr_contradiction(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1,
                       const ZeroPairing& pairing);

}  // namespace pbr
