// Seeded simulation of independent LUPI rounds.
//
// Random numbers come from std::mt19937_64. Rounds are processed in chunks of
// kChunkRounds; every (chunk, player) pair owns a generator seeded by
// substream_seed(seed, chunk, player), so results do not depend on how many
// threads execute the chunks.

#ifndef LUPI_MONTECARLO_HPP_
#define LUPI_MONTECARLO_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "lupi/strategy.hpp"

namespace lupi {

inline constexpr std::int64_t kChunkRounds = 1 << 16;

struct SimulationStats {
  std::int64_t rounds = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> wins;
  std::int64_t no_winner_rounds = 0;
  /// wins / rounds.
  Eigen::VectorXd empirical_payoffs;
  /// sqrt(f (1 - f) / rounds) per player.
  Eigen::VectorXd standard_errors;

  friend bool operator==(const SimulationStats&, const SimulationStats&) = default;
};

/// SplitMix64 mix of the master seed with the chunk and player indices.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk, std::uint64_t player);

/// Cumulative probabilities with the last entry forced to 1.
std::vector<double> cumulative(const MixedStrategy& strategy);

/// Inverse-CDF draw for u in [0, 1). Choice k (1-based) owns the half-open
/// interval [cdf[k-2], cdf[k-1]); u on a boundary selects the higher choice.
int sample_choice(const std::vector<double>& cdf, double u);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double to_unit_interval(std::uint64_t bits);

/// Plays `rounds` rounds. `threads` == 0 uses the hardware concurrency.
SimulationStats simulate(const StrategyProfile& profile, std::int64_t rounds, std::uint64_t seed,
                         unsigned threads = 1);

}  // namespace lupi

#endif  // LUPI_MONTECARLO_HPP_
