#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pbrcheck/report.hpp"

namespace pbrcheck {

// Process exit codes; stable across releases.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
// Negative verdict: infeasible model, incompatible state, mismatched zero
// pattern, or Monte Carlo deviation outside its bound.
inline constexpr int kExitNegative = 3;

/// Raised for invalid command parameters; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  ReportDocument document;
  int exit_code = kExitOk;
};

enum class Scenario { Pbr, Mz };
enum class SamplingModel { PsiOntic, MzConstant };

struct FeasibilityParams {
  Scenario scenario = Scenario::Pbr;
  std::size_t lambda_size = 4;
  double q = 0.0;
  std::uint64_t seed = 0;
};

struct MonteCarloParams {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  SamplingModel model = SamplingModel::PsiOntic;
  /// 0 = hardware concurrency. Does not affect the result.
  unsigned lanes = 0;
};

/// Samples drawn per preparation when a feasible witness is cross-checked.
inline constexpr std::uint64_t kWitnessCheckSamples = 20000;

// display_tolerance only moves the zero flags of emitted tables; verdicts
// and exit codes always use the library tolerances.
CommandResult cmd_pbr_table(double display_tolerance);
CommandResult cmd_mz(double display_tolerance);
CommandResult cmd_theta(double theta, double display_tolerance);
CommandResult cmd_feasibility(const FeasibilityParams& params, double display_tolerance);
CommandResult cmd_montecarlo(const MonteCarloParams& params, double display_tolerance);

std::string to_string(Scenario s);
std::string to_string(SamplingModel m);

}  // namespace pbrcheck
