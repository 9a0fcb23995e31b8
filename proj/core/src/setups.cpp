#include "pbr/setups.hpp"

#include <cmath>
#include <vector>

#include "pbr/errors.hpp"

namespace pbr {
namespace {

std::size_t device_index(DeviceState s) { return s == DeviceState::Zero ? 0 : 1; }

}  // namespace

ZeroPairing pbr_zero_pairing() {
  ZeroPairing pairing{4, {}};
  for (const auto& entry : xi_zero_pairing()) {
    pairing.constraints.push_back({device_index(entry.preparation.device1),
                                   device_index(entry.preparation.device2), entry.outcome});
  }
  return pairing;
}

FeasibilityProblem pbr_problem(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1) {
  const auto table = zero_outcome_table();
  const EpistemicDistribution* devices[2] = {&mu0, &mu1};
  FeasibilityProblem problem;
  for (const auto& label : all_preparations()) {
    const auto row = table.row(preparation_index(label));
    problem.preparations.push_back(
        joint(*devices[device_index(label.device1)], *devices[device_index(label.device2)]));
    problem.targets.emplace_back(std::vector<double>(row.begin(), row.end()));
    problem.labels.push_back(to_string(label));
  }
  return problem;
}

EpistemicDistribution mz_device_distribution(const EpistemicDistribution& mu0,
                                             const EpistemicDistribution& mu1) {
  return EpistemicDistribution::mixture(mu0, mu1, 0.5);
}

FeasibilityProblem mz_problem(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1) {
  const auto device = mz_device_distribution(mu0, mu1);
  FeasibilityProblem problem;
  problem.preparations.push_back(joint(device, device));
  problem.targets.push_back(born_distribution(mz_joint_state(), xi_basis()));
  problem.labels.push_back("Psi");
  return problem;
}

std::pair<EpistemicDistribution, EpistemicDistribution> overlap_pair(std::size_t lambda_size,
                                                                     double q) {
  if (lambda_size == 0) throw DomainError("lambda size must be at least 1");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("overlap q must lie in [0, 1]");
  OnticSpace space(lambda_size);
  if (lambda_size == 1) {
    if (q != 1.0) throw DomainError("a single ontic state forces overlap q = 1");
    auto mu = EpistemicDistribution::point(space, 0);
    return {mu, mu};
  }

  std::vector<std::size_t> delta;
  if (lambda_size == 2) {
    delta = {0, 1};
  } else {
    for (std::size_t i = 1; i + 1 < lambda_size; ++i) delta.push_back(i);
  }
  std::vector<double> m0(lambda_size, 0.0);
  std::vector<double> m1(lambda_size, 0.0);
  m0.front() += 1.0 - q;
  m1.back() += 1.0 - q;
  for (std::size_t i : delta) {
    m0[i] += q / double(delta.size());
    m1[i] += q / double(delta.size());
  }
  return {EpistemicDistribution(space, std::move(m0)), EpistemicDistribution(space, std::move(m1))};
}

OnticSpace psi_ontic_space() { return OnticSpace(std::vector<std::string>{"0", "+"}); }

ResponseFunction psi_ontic_response() {
  const auto table = zero_outcome_table();
  // Pair index λ1·2 + λ2 coincides with the table row of (λ1, λ2).
  return ResponseFunction(psi_ontic_space(), 4,
                          std::vector<double>(table.values().begin(), table.values().end()));
}

OnticModel psi_ontic_model(PreparationLabel label) {
  const auto space = psi_ontic_space();
  return OnticModel{EpistemicDistribution::point(space, device_index(label.device1)),
                    EpistemicDistribution::point(space, device_index(label.device2)),
                    psi_ontic_response()};
}

OnticModel mz_constant_model(const EpistemicDistribution& mu0, const EpistemicDistribution& mu1) {
  const auto device = mz_device_distribution(mu0, mu1);
  const auto target = born_distribution(mz_joint_state(), xi_basis());
  return OnticModel{device, device, ResponseFunction::constant(device.space(), target.probabilities())};
}

}  // namespace pbr
