#include "pbr/ontic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pbr/errors.hpp"
#include "pbr/tolerances.hpp"

namespace pbr {
namespace {

void check_mass(std::span<const double> mass, const char* what) {
  for (double m : mass) {
    if (!std::isfinite(m)) throw NonFiniteError(std::string(what) + ": mass is not finite");
    if (m < -tol::kProb) throw DomainError(std::string(what) + ": negative mass");
  }
  const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
  if (std::abs(total - 1.0) > tol::kProb) {
    throw DomainError(std::string(what) + ": mass does not sum to 1");
  }
}

void require_same_space(const OnticSpace& a, const OnticSpace& b) {
  if (!(a == b)) throw SpaceError("distributions are defined on different ontic spaces");
}

}  // namespace

OnticSpace::OnticSpace(std::size_t size) {
  if (size == 0) throw DomainError("ontic space must contain at least one state");
  labels_.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels_.push_back("l" + std::to_string(i));
}

OnticSpace::OnticSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw DomainError("ontic space must contain at least one state");
}

EpistemicDistribution::EpistemicDistribution(OnticSpace space, std::vector<double> mass)
    : space_(std::move(space)), mass_(std::move(mass)) {
  if (mass_.size() != space_.size()) {
    throw DimensionError("distribution has " + std::to_string(mass_.size()) +
                         " entries for a space of size " + std::to_string(space_.size()));
  }
  check_mass(mass_, "epistemic distribution");
}

EpistemicDistribution EpistemicDistribution::point(OnticSpace space, std::size_t index) {
  if (index >= space.size()) throw DomainError("point mass outside the ontic space");
  std::vector<double> mass(space.size(), 0.0);
  mass[index] = 1.0;
  return EpistemicDistribution(std::move(space), std::move(mass));
}

EpistemicDistribution EpistemicDistribution::uniform(OnticSpace space) {
  const std::size_t n = space.size();
  return EpistemicDistribution(std::move(space), std::vector<double>(n, 1.0 / double(n)));
}

std::vector<std::size_t> EpistemicDistribution::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (mass_[i] > tol::kZero) out.push_back(i);
  }
  return out;
}

EpistemicDistribution EpistemicDistribution::mixture(const EpistemicDistribution& a,
                                                     const EpistemicDistribution& b,
                                                     double weight) {
  require_same_space(a.space(), b.space());
  if (!(weight >= 0.0 && weight <= 1.0)) throw DomainError("mixture weight must lie in [0, 1]");
  std::vector<double> mass(a.size());
  for (std::size_t i = 0; i < mass.size(); ++i) mass[i] = weight * a[i] + (1.0 - weight) * b[i];
  return EpistemicDistribution(a.space(), std::move(mass));
}

OverlapReport overlap(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1) {
  require_same_space(mu0.space(), mu1.space());
  OverlapReport report;
  for (std::size_t i = 0; i < mu0.size(); ++i) {
    if (mu0[i] > tol::kZero && mu1[i] > tol::kZero) {
      report.overlap_states.push_back(i);
      report.q += std::min(mu0[i], mu1[i]);
    }
  }
  report.q = std::clamp(report.q, 0.0, 1.0);
  return report;
}

JointDistribution::JointDistribution(OnticSpace space, std::vector<double> mass)
    : space_(std::move(space)), mass_(std::move(mass)) {
  if (mass_.size() != space_.size() * space_.size()) {
    throw DimensionError("joint distribution size does not match the pair space");
  }
  check_mass(mass_, "joint distribution");
}

double JointDistribution::at(std::size_t lambda1, std::size_t lambda2) const {
  const std::size_t n = space_.size();
  if (lambda1 >= n || lambda2 >= n) throw DomainError("ontic index out of range");
  return mass_[lambda1 * n + lambda2];
}

EpistemicDistribution JointDistribution::marginal_first() const {
  const std::size_t n = space_.size();
  std::vector<double> m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i] += mass_[i * n + j];
  }
  return EpistemicDistribution(space_, std::move(m));
}

EpistemicDistribution JointDistribution::marginal_second() const {
  const std::size_t n = space_.size();
  std::vector<double> m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[j] += mass_[i * n + j];
  }
  return EpistemicDistribution(space_, std::move(m));
}

JointDistribution joint(const EpistemicDistribution& mu_a, const EpistemicDistribution& mu_b) {
  require_same_space(mu_a.space(), mu_b.space());
  const std::size_t n = mu_a.size();
  std::vector<double> mass(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mass[i * n + j] = mu_a[i] * mu_b[j];
  }
  return JointDistribution(mu_a.space(), std::move(mass));
}

ResponseFunction::ResponseFunction(OnticSpace space, std::size_t outcome_count,
                                   std::vector<double> table)
    : space_(std::move(space)), outcome_count_(outcome_count), table_(std::move(table)) {
  if (outcome_count_ == 0) throw DomainError("response function needs at least one outcome");
  if (table_.size() != pair_count() * outcome_count_) {
    throw DimensionError("response table size does not match pairs x outcomes");
  }
  for (std::size_t p = 0; p < pair_count(); ++p) {
    check_mass(std::span<const double>(table_).subspan(p * outcome_count_, outcome_count_),
               "response function row");
  }
}

ResponseFunction ResponseFunction::constant(OnticSpace space,
                                            std::span<const double> probabilities) {
  const std::size_t pairs = space.size() * space.size();
  std::vector<double> table;
  table.reserve(pairs * probabilities.size());
  for (std::size_t p = 0; p < pairs; ++p) {
    table.insert(table.end(), probabilities.begin(), probabilities.end());
  }
  return ResponseFunction(std::move(space), probabilities.size(), std::move(table));
}

std::span<const double> ResponseFunction::row(std::size_t lambda1, std::size_t lambda2) const {
  const std::size_t n = space_.size();
  if (lambda1 >= n || lambda2 >= n) throw DomainError("ontic index out of range");
  return std::span<const double>(table_).subspan((lambda1 * n + lambda2) * outcome_count_,
                                                 outcome_count_);
}

double ResponseFunction::at(std::size_t lambda1, std::size_t lambda2, std::size_t outcome) const {
  return row(lambda1, lambda2)[outcome];
}

std::vector<double> predicted_statistics(const JointDistribution& prep,
                                         const ResponseFunction& response) {
  require_same_space(prep.space(), response.space());
  const std::size_t k_count = response.outcome_count();
  std::vector<double> stats(k_count, 0.0);
  const auto table = response.table();
  for (std::size_t p = 0; p < prep.pair_count(); ++p) {
    const double w = prep.mass()[p];
    if (w == 0.0) continue;
    for (std::size_t k = 0; k < k_count; ++k) stats[k] += w * table[p * k_count + k];
  }
  return stats;
}

std::vector<std::pair<std::size_t, std::size_t>> forced_contradictions(
    const EpistemicDistribution& mu0, const EpistemicDistribution& mu1,
    const ZeroPairing& pairing) {
  require_same_space(mu0.space(), mu1.space());
  const EpistemicDistribution* devices[2] = {&mu0, &mu1};
  for (const auto& c : pairing.constraints) {
    if (c.device1 > 1 || c.device2 > 1) throw DomainError("zero constraint device index must be 0 or 1");
    if (c.outcome >= pairing.outcome_count) throw DomainError("zero constraint outcome out of range");
  }

  std::vector<std::pair<std::size_t, std::size_t>> forced;
  const std::size_t n = mu0.size();
  std::vector<bool> forbidden(pairing.outcome_count);
  for (std::size_t l1 = 0; l1 < n; ++l1) {
    for (std::size_t l2 = 0; l2 < n; ++l2) {
      std::fill(forbidden.begin(), forbidden.end(), false);
      for (const auto& c : pairing.constraints) {
        if ((*devices[c.device1])[l1] > tol::kZero && (*devices[c.device2])[l2] > tol::kZero) {
          forbidden[c.outcome] = true;
        }
      }
      if (std::all_of(forbidden.begin(), forbidden.end(), [](bool b) { return b; })) {
        forced.emplace_back(l1, l2);
      }
    }
  }
  return forced;
}

bool pbr_contradiction(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1,
                       const ZeroPairing& pairing) {
  return !forced_contradictions(mu0, mu1, pairing).empty();
}

}  // namespace pbr
