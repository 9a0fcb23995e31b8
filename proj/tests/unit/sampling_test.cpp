#include "pbr/sampling.hpp"

#include <gtest/gtest.h>

#include "pbr/errors.hpp"
#include "pbr/setups.hpp"

namespace pbr {
namespace {

TEST(SampleIndexTest, InverseCdf) {
  const double w[] = {0.25, 0.0, 0.75};
  EXPECT_EQ(sample_index(w, 0.0), 0u);
  EXPECT_EQ(sample_index(w, 0.2499), 0u);
  EXPECT_EQ(sample_index(w, 0.25), 2u);
  // Past the accumulated total only a positive-weight index is returned.
  const double tail[] = {0.5, 0.5 - 1e-16, 0.0};
  EXPECT_EQ(sample_index(tail, 0.9999999999999999), 1u);
}

TEST(SplitMixTest, StreamSeedsDiffer) {
  EXPECT_NE(block_stream_seed(1, 0, 0), block_stream_seed(1, 0, 1));
  EXPECT_NE(block_stream_seed(1, 0, 2), block_stream_seed(1, 1, 0));
  EXPECT_NE(block_stream_seed(1, 0, 0), block_stream_seed(2, 0, 0));
  // Reference value of the splitmix64 finalizer for input 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(MonteCarloTest, PointMassesWithDeterministicResponse) {
  const OnticSpace space(3);
  std::vector<double> table(9 * 2, 0.0);
  for (std::size_t p = 0; p < 9; ++p) table[p * 2 + (p == 2 * 3 + 1 ? 1 : 0)] = 1.0;
  const OnticModel model{EpistemicDistribution::point(space, 2), EpistemicDistribution::point(space, 1),
                         ResponseFunction(space, 2, table)};
  const auto result = monte_carlo(model, 5000, 3);
  EXPECT_EQ(result.counts[0], 0u);
  EXPECT_EQ(result.counts[1], 5000u);
  EXPECT_EQ(result.frequencies()[1], 1.0);
}

TEST(MonteCarloTest, PsiOnticModelTracksBornRow) {
  const std::uint64_t n = 100000;
  const auto label = all_preparations()[0];
  const auto result = monte_carlo(psi_ontic_model(label), n, 99);
  const auto born = zero_outcome_table();
  const auto freq = result.frequencies();
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_LE(std::abs(freq[k] - born.at(0, k)), three_sigma_bound(born.at(0, k), n)) << k;
  }
  EXPECT_EQ(result.counts[0], 0u);
}

TEST(MonteCarloTest, ConstantQuarterResponse) {
  const std::uint64_t n = 100000;
  const auto [mu0, mu1] = overlap_pair(4, 0.3);
  const auto result = monte_carlo(mz_constant_model(mu0, mu1), n, 5);
  for (double f : result.frequencies()) EXPECT_LE(std::abs(f - 0.25), 3.0 * std::sqrt(0.25 * 0.75 / n));
}

TEST(MonteCarloTest, SameSeedSameCounts) {
  const auto model = psi_ontic_model(all_preparations()[3]);
  EXPECT_EQ(monte_carlo(model, 30000, 17).counts, monte_carlo(model, 30000, 17).counts);
  EXPECT_NE(monte_carlo(model, 30000, 17).counts, monte_carlo(model, 30000, 18).counts);
}

TEST(MonteCarloTest, LaneCountDoesNotChangeResult) {
  const auto [mu0, mu1] = overlap_pair(5, 0.4);
  const auto model = mz_constant_model(mu0, mu1);
  const auto serial = monte_carlo(model, 50001, 8, 1);
  for (unsigned lanes : {2u, 3u, 7u, 0u}) {
    EXPECT_EQ(monte_carlo(model, 50001, 8, lanes).counts, serial.counts) << lanes << " lanes";
  }
}

TEST(MonteCarloTest, ZeroSamplesRejected) {
  EXPECT_THROW(monte_carlo(psi_ontic_model(all_preparations()[0]), 0, 1), DomainError);
}

TEST(MonteCarloTest, SpaceMismatchRejected) {
  const OnticModel model{EpistemicDistribution::point(OnticSpace(2), 0),
                         EpistemicDistribution::point(OnticSpace(3), 0), psi_ontic_response()};
  EXPECT_THROW(monte_carlo(model, 10, 1), SpaceError);
}

TEST(ThreeSigmaBoundTest, Values) {
  EXPECT_EQ(three_sigma_bound(0.0, 100), 0.0);
  EXPECT_DOUBLE_EQ(three_sigma_bound(0.5, 100), 0.15);
}

}  // namespace
}  // namespace pbr
