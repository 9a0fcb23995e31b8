#include "pbrcheck/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pbr/errors.hpp"
#include "pbr/feasibility.hpp"
#include "pbr/sampling.hpp"
#include "pbr/scenarios.hpp"
#include "pbr/setups.hpp"

namespace pbrcheck {
namespace {

ReportDocument new_document(std::string scenario, double display_tolerance) {
  ReportDocument doc;
  doc.scenario = std::move(scenario);
  doc.metadata.display_tolerance = display_tolerance;
  return doc;
}

NamedVector named_vector(std::string name, const pbr::ComplexVector& v) {
  return NamedVector{std::move(name), {v.amplitudes().begin(), v.amplitudes().end()}};
}

pbr::ProbabilityTable distribution_table(const pbr::EpistemicDistribution& mu0,
                                         const pbr::EpistemicDistribution& mu1) {
  std::vector<double> values(mu0.mass().begin(), mu0.mass().end());
  values.insert(values.end(), mu1.mass().begin(), mu1.mass().end());
  return pbr::ProbabilityTable({"mu0", "mu1"},
                               {mu0.space().labels().begin(), mu0.space().labels().end()},
                               std::move(values));
}

pbr::ProbabilityTable witness_table(const pbr::ResponseFunction& witness) {
  const auto& space = witness.space();
  std::vector<std::string> rows;
  for (const auto& a : space.labels()) {
    for (const auto& b : space.labels()) rows.push_back(a + "/" + b);
  }
  return pbr::ProbabilityTable(std::move(rows), pbr::xi_labels(),
                               {witness.table().begin(), witness.table().end()});
}

std::string zero_cells(const pbr::ProbabilityTable& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.columns(); ++c) {
      if (!t.is_zero(r, c)) continue;
      if (!out.empty()) out += " ";
      out += "(" + t.row_labels()[r] + "," + t.column_labels()[c] + ")";
    }
  }
  return out.empty() ? "none" : out;
}

struct SampleComparison {
  double max_deviation = 0.0;
  double max_bound = 0.0;
  bool within = true;
};

void compare_row(std::span<const double> empirical, std::span<const double> target,
                 std::uint64_t n, SampleComparison& acc) {
  for (std::size_t k = 0; k < target.size(); ++k) {
    const double dev = std::abs(empirical[k] - target[k]);
    const double bound = pbr::three_sigma_bound(target[k], n);
    acc.max_deviation = std::max(acc.max_deviation, dev);
    acc.max_bound = std::max(acc.max_bound, bound);
    if (dev > bound) acc.within = false;
  }
}

}  // namespace

std::string to_string(Scenario s) { return s == Scenario::Pbr ? "pbr" : "mz"; }

std::string to_string(SamplingModel m) {
  return m == SamplingModel::PsiOntic ? "psi-ontic" : "mz-constant";
}

CommandResult cmd_pbr_table(double display_tolerance) {
  auto doc = new_document("pbr-table", display_tolerance);
  const auto table = pbr::zero_outcome_table();
  const bool matches = pbr::matches_zero_pairing(table);

  doc.quantities.push_back({"zero_cells", double(table.zero_count())});
  doc.tables.push_back({"born", table.with_zero_threshold(display_tolerance)});
  doc.verdicts.push_back({"zero-pattern", matches ? "matches" : "mismatch", zero_cells(table)});
  return {std::move(doc), matches ? kExitOk : kExitNegative};
}

CommandResult cmd_mz(double display_tolerance) {
  auto doc = new_document("mz", display_tolerance);
  const auto psi = pbr::mz_preparation_state();
  const auto joint_state = pbr::mz_joint_state();
  const auto row = pbr::compatibility_report(joint_state, pbr::xi_basis(), "Psi");

  doc.quantities.push_back({"N2", pbr::mz_normalization_squared()});
  doc.quantities.push_back(
      {"N2_closed_form", std::numbers::sqrt2 / (2.0 * std::numbers::sqrt2 + 2.0)});
  doc.vectors.push_back(named_vector("psi", psi));
  doc.vectors.push_back(named_vector("Psi", joint_state));
  doc.tables.push_back({"compatibility", row.with_zero_threshold(display_tolerance)});
  const bool compatible = row.compatible();
  doc.verdicts.push_back({"compatibility", compatible ? "compatible" : "incompatible",
                          compatible ? "every outcome has non-zero probability"
                                     : "zero cells " + zero_cells(row)});
  return {std::move(doc), compatible ? kExitOk : kExitNegative};
}

CommandResult cmd_theta(double theta, double display_tolerance) {
  pbr::ThetaPair pair = [&] {
    try {
      return pbr::theta_pair(theta);
    } catch (const pbr::Error& e) {
      throw UsageError(e.what());
    }
  }();
  auto doc = new_document("theta", display_tolerance);
  doc.metadata.parameters.emplace_back("theta", format_number(theta));

  const auto overlap = pbr::inner(pair.psi0, pair.psi1);
  doc.quantities.push_back({"theta", theta});
  doc.quantities.push_back({"overlap", overlap.real()});
  doc.quantities.push_back({"overlap_imag", overlap.imag()});
  doc.quantities.push_back({"cos_theta", std::cos(theta)});
  doc.vectors.push_back(named_vector("psi0", pair.psi0));
  doc.vectors.push_back(named_vector("psi1", pair.psi1));
  doc.tables.push_back({"theta-products", pbr::theta_table(pair).with_zero_threshold(display_tolerance)});
  return {std::move(doc), kExitOk};
}

CommandResult cmd_feasibility(const FeasibilityParams& params, double display_tolerance) {
  if (params.lambda_size < 1 || params.lambda_size > 8) {
    throw UsageError("--lambda-size must lie in [1, 8]");
  }
  if (!(params.q >= 0.0 && params.q <= 1.0)) throw UsageError("--q must lie in [0, 1]");
  auto [mu0, mu1] = [&] {
    try {
      return pbr::overlap_pair(params.lambda_size, params.q);
    } catch (const pbr::Error& e) {
      throw UsageError(e.what());
    }
  }();

  auto doc = new_document("feasibility", display_tolerance);
  doc.metadata.seed = params.seed;
  doc.metadata.parameters.emplace_back("scenario", to_string(params.scenario));
  doc.metadata.parameters.emplace_back("lambda_size", std::to_string(params.lambda_size));
  doc.metadata.parameters.emplace_back("q", format_number(params.q));

  const auto ov = pbr::overlap(mu0, mu1);
  doc.quantities.push_back({"overlap_q", ov.q});
  doc.quantities.push_back({"overlap_states", double(ov.overlap_states.size())});
  doc.tables.push_back({"mu", distribution_table(mu0, mu1).with_zero_threshold(display_tolerance)});

  const bool pbr_setup = params.scenario == Scenario::Pbr;
  const auto problem = pbr_setup ? pbr::pbr_problem(mu0, mu1) : pbr::mz_problem(mu0, mu1);
  const auto verdict = pbr::feasibility(problem);
  doc.quantities.push_back({"residual", verdict.residual});

  if (verdict.feasible()) {
    const auto& witness = *verdict.witness;
    doc.tables.push_back({"witness", witness_table(witness).with_zero_threshold(display_tolerance)});
    doc.verdicts.push_back({"feasibility", "feasible",
                            "witness residual " + format_number(verdict.residual)});

    // Sample every preparation through the witness as an independent check.
    const auto mz_device = pbr::mz_device_distribution(mu0, mu1);
    SampleComparison cmp;
    for (std::size_t p = 0; p < problem.preparations.size(); ++p) {
      const auto label = pbr::all_preparations()[p];
      const auto& d1 = !pbr_setup ? mz_device : label.device1 == pbr::DeviceState::Zero ? mu0 : mu1;
      const auto& d2 = !pbr_setup ? mz_device : label.device2 == pbr::DeviceState::Zero ? mu0 : mu1;
      const pbr::OnticModel model{d1, d2, witness};
      const auto emp = pbr::monte_carlo(model, kWitnessCheckSamples, pbr::splitmix64(params.seed + p));
      compare_row(emp.frequencies(), problem.targets[p].probabilities(), kWitnessCheckSamples, cmp);
    }
    doc.quantities.push_back({"witness_sampling_max_deviation", cmp.max_deviation});
    doc.verdicts.push_back({"witness-sampling", cmp.within ? "within-bound" : "outside-bound",
                            std::to_string(kWitnessCheckSamples) + " samples per preparation"});
  } else {
    if (verdict.certificate) doc.quantities.push_back({"certificate_gap", verdict.certificate->gap});
    doc.verdicts.push_back({"feasibility", "infeasible", verdict.violated_constraint});
  }

  if (pbr_setup) {
    const bool contradiction = pbr::pbr_contradiction(mu0, mu1, pbr::pbr_zero_pairing());
    doc.verdicts.push_back({"analytic", contradiction ? "contradiction" : "no-contradiction",
                            "overlap q = " + format_number(ov.q)});
    doc.verdicts.push_back({"agreement", contradiction != verdict.feasible() ? "agree" : "disagree",
                            "simplex verdict against the overlap predicate"});
  }
  return {std::move(doc), verdict.feasible() ? kExitOk : kExitNegative};
}

CommandResult cmd_montecarlo(const MonteCarloParams& params, double display_tolerance) {
  if (params.samples < 1) throw UsageError("--samples must be at least 1");
  auto doc = new_document("montecarlo", display_tolerance);
  doc.metadata.seed = params.seed;
  doc.metadata.parameters.emplace_back("model", to_string(params.model));
  doc.metadata.parameters.emplace_back("samples", std::to_string(params.samples));

  std::vector<std::string> rows;
  std::vector<double> empirical;
  std::vector<double> target;
  SampleComparison cmp;
  auto record = [&](std::string row, const pbr::OnticModel& model, std::span<const double> expected,
                    std::uint64_t seed) {
    const auto emp = pbr::monte_carlo(model, params.samples, seed, params.lanes);
    const auto freq = emp.frequencies();
    compare_row(freq, expected, params.samples, cmp);
    rows.push_back(std::move(row));
    empirical.insert(empirical.end(), freq.begin(), freq.end());
    target.insert(target.end(), expected.begin(), expected.end());
  };

  if (params.model == SamplingModel::PsiOntic) {
    const auto born = pbr::zero_outcome_table();
    for (const auto& label : pbr::all_preparations()) {
      const auto p = pbr::preparation_index(label);
      record(pbr::to_string(label), pbr::psi_ontic_model(label), born.row(p),
             pbr::splitmix64(params.seed + p));
    }
  } else {
    const auto [mu0, mu1] = pbr::overlap_pair(4, 0.3);
    const auto born = pbr::born_distribution(pbr::mz_joint_state(), pbr::xi_basis());
    record("Psi", pbr::mz_constant_model(mu0, mu1), born.probabilities(), pbr::splitmix64(params.seed));
  }

  doc.quantities.push_back({"max_abs_deviation", cmp.max_deviation});
  doc.quantities.push_back({"max_three_sigma_bound", cmp.max_bound});
  doc.tables.push_back(
      {"empirical", pbr::ProbabilityTable(rows, pbr::xi_labels(), std::move(empirical), display_tolerance)});
  doc.tables.push_back(
      {"target", pbr::ProbabilityTable(rows, pbr::xi_labels(), std::move(target), display_tolerance)});
  doc.verdicts.push_back({"statistics", cmp.within ? "within-bound" : "outside-bound",
                          "every cell compared with 3*sqrt(p(1-p)/n)"});
  return {std::move(doc), cmp.within ? kExitOk : kExitNegative};
}

}  // namespace pbrcheck
