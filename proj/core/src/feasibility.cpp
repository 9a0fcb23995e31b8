#include "pbr/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pbr/errors.hpp"
#include "pbr/tolerances.hpp"

namespace pbr {
namespace {

void validate(const FeasibilityProblem& problem) {
  if (problem.preparations.empty()) throw DimensionError("feasibility needs at least one preparation");
  if (problem.preparations.size() != problem.targets.size()) {
    throw DimensionError("one target distribution per preparation is required");
  }
  if (!problem.labels.empty() && problem.labels.size() != problem.preparations.size()) {
    throw DimensionError("one label per preparation is required");
  }
  const auto& space = problem.preparations.front().space();
  for (const auto& prep : problem.preparations) {
    if (!(prep.space() == space)) throw SpaceError("preparations live on different pair spaces");
  }
  const std::size_t k = problem.targets.front().size();
  for (const auto& target : problem.targets) {
    if (target.size() != k) throw DimensionError("targets have different outcome counts");
  }
}

std::string preparation_name(const FeasibilityProblem& problem, std::size_t p) {
  return problem.labels.empty() ? "prep" + std::to_string(p) : problem.labels[p];
}

}  // namespace

std::vector<std::string> constraint_names(const FeasibilityProblem& problem) {
  validate(problem);
  const auto& space = problem.preparations.front().space();
  const std::size_t n = space.size();
  const std::size_t k_count = problem.targets.front().size();
  std::vector<std::string> names;
  for (std::size_t l1 = 0; l1 < n; ++l1) {
    for (std::size_t l2 = 0; l2 < n; ++l2) {
      names.push_back("sum_k xi(k|" + space.label(l1) + "," + space.label(l2) + ") = 1");
    }
  }
  for (std::size_t p = 0; p < problem.preparations.size(); ++p) {
    for (std::size_t k = 0; k < k_count; ++k) {
      std::ostringstream os;
      os.imbue(std::locale::classic());
      os << "P(k" << (k + 1) << " | " << preparation_name(problem, p)
         << ") = " << problem.targets[p][k];
      names.push_back(os.str());
    }
  }
  return names;
}

std::string to_string(FeasibilityStatus status) {
  return status == FeasibilityStatus::Feasible ? "feasible" : "infeasible";
}

lp::EqualitySystem build_constraints(const FeasibilityProblem& problem) {
  validate(problem);
  const std::size_t pairs = problem.preparations.front().pair_count();
  const std::size_t k_count = problem.targets.front().size();
  const std::size_t preps = problem.preparations.size();

  auto system = lp::make_system(pairs + preps * k_count, pairs * k_count);
  for (std::size_t p = 0; p < pairs; ++p) {
    for (std::size_t k = 0; k < k_count; ++k) system.at(p, p * k_count + k) = 1.0;
    system.b[p] = 1.0;
  }
  for (std::size_t i = 0; i < preps; ++i) {
    const auto mass = problem.preparations[i].mass();
    for (std::size_t k = 0; k < k_count; ++k) {
      const std::size_t row = pairs + i * k_count + k;
      for (std::size_t p = 0; p < pairs; ++p) system.at(row, p * k_count + k) = mass[p];
      system.b[row] = problem.targets[i][k];
    }
  }
  return system;
}

double witness_residual(const FeasibilityProblem& problem, const ResponseFunction& witness) {
  validate(problem);
  double worst = 0.0;
  for (std::size_t i = 0; i < problem.preparations.size(); ++i) {
    const auto predicted = predicted_statistics(problem.preparations[i], witness);
    if (predicted.size() != problem.targets[i].size()) {
      throw DimensionError("witness outcome count does not match the targets");
    }
    for (std::size_t k = 0; k < predicted.size(); ++k) {
      worst = std::max(worst, std::abs(predicted[k] - problem.targets[i][k]));
    }
  }
  return worst;
}

FeasibilityVerdict feasibility(const FeasibilityProblem& problem) {
  const auto system = build_constraints(problem);
  const auto& space = problem.preparations.front().space();
  const std::size_t k_count = problem.targets.front().size();
  const auto solution = lp::phase_one(system);

  FeasibilityVerdict verdict;
  if (solution.infeasibility <= tol::kLp) {
    // Renormalize each row to absorb pivoting round-off before re-checking.
    auto table = solution.x;
    for (std::size_t p = 0; p < space.size() * space.size(); ++p) {
      double sum = 0.0;
      for (std::size_t k = 0; k < k_count; ++k) sum += table[p * k_count + k];
      for (std::size_t k = 0; k < k_count; ++k) table[p * k_count + k] /= sum;
    }
    ResponseFunction witness(space, k_count, std::move(table));
    const double residual = witness_residual(problem, witness);
    if (residual <= tol::kLp) {
      verdict.status = FeasibilityStatus::Feasible;
      verdict.witness = std::move(witness);
      verdict.residual = residual;
      return verdict;
    }
    verdict.violated_constraint =
        "simplex reported a solution whose re-checked residual exceeds the tolerance";
    verdict.residual = residual;
    return verdict;
  }

  InfeasibilityCertificate cert;
  cert.constraint_names = constraint_names(problem);
  cert.core_rows = lp::irreducible_infeasible_rows(system, tol::kLp);
  const auto core = lp::phase_one(lp::select_rows(system, cert.core_rows));
  cert.multipliers.assign(system.rows, 0.0);
  for (std::size_t i = 0; i < cert.core_rows.size(); ++i) {
    cert.multipliers[cert.core_rows[i]] = core.farkas[i];
  }
  cert.gap = lp::certificate_gap(system, cert.multipliers);
  cert.slack = lp::max_certificate_slack(system, cert.multipliers);

  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "no response function satisfies jointly:";
  bool first = true;
  for (std::size_t row : cert.core_rows) {
    os << (first ? " " : "; ") << cert.constraint_names[row];
    first = false;
  }
  verdict.violated_constraint = os.str();
  verdict.residual = solution.infeasibility;
  verdict.certificate = std::move(cert);
  return verdict;
}

}  // namespace pbr
