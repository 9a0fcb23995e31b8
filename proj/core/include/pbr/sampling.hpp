#pragma once

// Seeded Monte Carlo sampling of a two-device ontological model.
//
// Stream splitting: the sample range is cut into blocks of kSampleBlock
// draws. Block b owns three std::mt19937_64 engines, one each for device 1,
// device 2 and the response, seeded with
//   splitmix64(seed + 0x9E3779B97F4A7C15 · (3b + stream + 1)),  stream ∈ {0,1,2}.
// Lanes take whole blocks and their counts are summed, so the result depends
// only on (model, samples, seed), never on the lane count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pbr/ontic.hpp"

namespace pbr {

inline constexpr std::uint64_t kSampleBlock = 4096;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of the engine for one stream of one block.
std::uint64_t block_stream_seed(std::uint64_t seed, std::uint64_t block, unsigned stream) noexcept;

/// Independent devices with distributions over a shared ontic space,
/// followed by a measurement with the given response function.
struct OnticModel {
  EpistemicDistribution device1;
  EpistemicDistribution device2;
  ResponseFunction response;

  /// Throws SpaceError unless all three share one ontic space.
  void validate() const;
};

struct EmpiricalDistribution {
  std::vector<std::uint64_t> counts;
  std::uint64_t samples = 0;

  std::vector<double> frequencies() const;
};

/// Index drawn from a discrete distribution by inverse CDF, given u ∈ [0,1).
std::size_t sample_index(std::span<const double> weights, double u);

/// Draws λ1 ~ device1, λ2 ~ device2, then an outcome ~ ξ(·|λ1,λ2), samples
/// times. lanes = 0 uses the hardware concurrency. Throws DomainError when
/// samples is zero.
EmpiricalDistribution monte_carlo(const OnticModel& model, std::uint64_t samples,
                                  std::uint64_t seed, unsigned lanes = 1);

/// 3·√(p(1−p)/n)
double three_sigma_bound(double p, std::uint64_t n);

}  // namespace pbr
