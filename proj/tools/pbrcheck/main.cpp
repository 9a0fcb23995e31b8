#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "pbr/errors.hpp"
#include "pbrcheck/commands.hpp"

using namespace pbrcheck;

namespace {

int emit(const CommandResult& result, Format format) {
  std::cout << render(result.document, format);
  std::cout.flush();
  if (!std::cout || std::fflush(stdout) != 0) {
    std::cerr << "pbrcheck: failed to write output\n";
    return kExitIo;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Born tables, overlap feasibility and sampling checks for the PBR preparation setups"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Text;
  double tolerance = pbr::tol::kProb;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--tolerance", tolerance, "Zero-flag threshold for displayed tables")
      ->check(CLI::NonNegativeNumber);

  auto* pbr_table = app.add_subcommand("pbr-table", "Born table of the four product preparations");
  auto* mz = app.add_subcommand("mz", "Mach-Zehnder preparation state and its compatibility row");

  auto* theta_cmd = app.add_subcommand("theta", "Overlap and Born table of the theta pair");
  double theta = 0.0;
  theta_cmd->add_option("--theta", theta, "Angle in radians, 0 < theta < pi")->required();

  auto* feas = app.add_subcommand("feasibility", "Decide whether an overlapping model fits");
  FeasibilityParams fp;
  const std::map<std::string, Scenario> scenarios{{"pbr", Scenario::Pbr}, {"mz", Scenario::Mz}};
  feas->add_option("--scenario", fp.scenario, "pbr or mz")
      ->transform(CLI::CheckedTransformer(scenarios, CLI::ignore_case))
      ->required();
  feas->add_option("--lambda-size", fp.lambda_size, "Number of ontic states (1-8)")
      ->capture_default_str();
  feas->add_option("--q", fp.q, "Total-variation overlap of mu0 and mu1")->capture_default_str();
  feas->add_option("--seed", fp.seed, "Seed for the witness sampling check")->capture_default_str();

  auto* mc = app.add_subcommand("montecarlo", "Sample a model and compare with the Born rule");
  MonteCarloParams mp;
  const std::map<std::string, SamplingModel> models{{"psi-ontic", SamplingModel::PsiOntic},
                                                    {"mz-constant", SamplingModel::MzConstant}};
  mc->add_option("--samples", mp.samples, "Samples per preparation")->capture_default_str();
  mc->add_option("--seed", mp.seed, "Generator seed")->capture_default_str();
  mc->add_option("--model", mp.model, "psi-ontic or mz-constant")
      ->transform(CLI::CheckedTransformer(models, CLI::ignore_case))
      ->capture_default_str();
  mc->add_option("--lanes", mp.lanes, "Worker threads (0 = all cores); never changes results")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "pbrcheck: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*pbr_table) return emit(cmd_pbr_table(tolerance), format);
    if (*mz) return emit(cmd_mz(tolerance), format);
    if (*theta_cmd) return emit(cmd_theta(theta, tolerance), format);
    if (*feas) return emit(cmd_feasibility(fp, tolerance), format);
    if (*mc) return emit(cmd_montecarlo(mp, tolerance), format);
  } catch (const UsageError& e) {
    std::cerr << "pbrcheck: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  return kExitUsage;
}
