#include "pbr/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "pbr/errors.hpp"

namespace pbr {
namespace {

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

void run_block(const OnticModel& model, std::uint64_t seed, std::uint64_t block,
               std::uint64_t draws, std::vector<std::uint64_t>& counts) {
  std::mt19937_64 dev1(block_stream_seed(seed, block, 0));
  std::mt19937_64 dev2(block_stream_seed(seed, block, 1));
  std::mt19937_64 resp(block_stream_seed(seed, block, 2));
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto l1 = sample_index(model.device1.mass(), uniform01(dev1));
    const auto l2 = sample_index(model.device2.mass(), uniform01(dev2));
    ++counts[sample_index(model.response.row(l1, l2), uniform01(resp))];
  }
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t block_stream_seed(std::uint64_t seed, std::uint64_t block, unsigned stream) noexcept {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (3 * block + stream + 1));
}

void OnticModel::validate() const {
  if (!(device1.space() == device2.space()) || !(device1.space() == response.space())) {
    throw SpaceError("model distributions and response use different ontic spaces");
  }
}

std::vector<double> EmpiricalDistribution::frequencies() const {
  std::vector<double> f(counts.size(), 0.0);
  if (samples == 0) return f;
  for (std::size_t k = 0; k < counts.size(); ++k) f[k] = double(counts[k]) / double(samples);
  return f;
}

std::size_t sample_index(std::span<const double> weights, double u) {
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // u landed in the rounding gap above the final cumulative sum.
  return last_positive;
}

EmpiricalDistribution monte_carlo(const OnticModel& model, std::uint64_t samples,
                                  std::uint64_t seed, unsigned lanes) {
  model.validate();
  if (samples == 0) throw DomainError("monte carlo needs at least one sample");
  const std::size_t k_count = model.response.outcome_count();
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  if (lanes == 0) lanes = std::max(1u, std::thread::hardware_concurrency());
  lanes = static_cast<unsigned>(std::min<std::uint64_t>(lanes, blocks));

  std::vector<std::vector<std::uint64_t>> lane_counts(lanes, std::vector<std::uint64_t>(k_count, 0));
  auto work = [&](unsigned lane) {
    for (std::uint64_t b = lane; b < blocks; b += lanes) {
      const std::uint64_t draws = std::min(kSampleBlock, samples - b * kSampleBlock);
      run_block(model, seed, b, draws, lane_counts[lane]);
    }
  };
  if (lanes == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(lanes);
    for (unsigned lane = 0; lane < lanes; ++lane) workers.emplace_back(work, lane);
  }

  EmpiricalDistribution result;
  result.samples = samples;
  result.counts.assign(k_count, 0);
  for (const auto& c : lane_counts) {
    for (std::size_t k = 0; k < k_count; ++k) result.counts[k] += c[k];
  }
  return result;
}

double three_sigma_bound(double p, std::uint64_t n) {
  const double clipped = std::clamp(p, 0.0, 1.0);
  return 3.0 * std::sqrt(clipped * (1.0 - clipped) / double(n));
}

}  // namespace pbr
