#include "lupi/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "lupi/game.hpp"

namespace lupi {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct ChunkCounts {
  std::vector<std::int64_t> wins;
  std::int64_t no_winner = 0;
};

ChunkCounts play_chunk(const std::vector<std::vector<double>>& cdfs, std::uint64_t seed,
                       std::int64_t chunk, std::int64_t rounds) {
  const int n = static_cast<int>(cdfs.size());
  std::vector<std::mt19937_64> streams;
  streams.reserve(n);
  for (int k = 0; k < n; ++k) {
    streams.emplace_back(substream_seed(seed, static_cast<std::uint64_t>(chunk),
                                        static_cast<std::uint64_t>(k)));
  }
  ChunkCounts counts{std::vector<std::int64_t>(n, 0), 0};
  std::vector<int> picks(n);
  for (std::int64_t r = 0; r < rounds; ++r) {
    for (int k = 0; k < n; ++k) picks[k] = sample_choice(cdfs[k], to_unit_interval(streams[k]()));
    if (const auto winner = adjudicate(picks)) {
      ++counts.wins[*winner];
    } else {
      ++counts.no_winner;
    }
  }
  return counts;
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk, std::uint64_t player) {
  return splitmix64(splitmix64(splitmix64(seed) ^ chunk) ^ player);
}

std::vector<double> cumulative(const MixedStrategy& strategy) {
  std::vector<double> cdf(strategy.size());
  double running = 0.0;
  int last_positive = 0;
  for (int i = 0; i < strategy.size(); ++i) {
    running += strategy[i];
    cdf[i] = running;
    if (strategy[i] > 0.0) last_positive = i;
  }
  std::fill(cdf.begin() + last_positive, cdf.end(), 1.0);
  return cdf;
}

int sample_choice(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1)) + 1;
}

double to_unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

SimulationStats simulate(const StrategyProfile& profile, std::int64_t rounds, std::uint64_t seed,
                         unsigned threads) {
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  const int n = profile.n();
  std::vector<std::vector<double>> cdfs;
  for (const auto& s : profile.strategies()) cdfs.push_back(cumulative(s));

  const std::int64_t chunks = (rounds + kChunkRounds - 1) / kChunkRounds;
  std::vector<ChunkCounts> results(static_cast<std::size_t>(chunks));
  auto run = [&](std::int64_t c) {
    const std::int64_t size = std::min(kChunkRounds, rounds - c * kChunkRounds);
    results[c] = play_chunk(cdfs, seed, c, size);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1 || chunks == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run(c);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::int64_t c = t; c < chunks; c += threads) run(c);
      });
    }
  }

  SimulationStats stats;
  stats.rounds = rounds;
  stats.seed = seed;
  stats.wins.assign(n, 0);
  for (const auto& r : results) {
    for (int k = 0; k < n; ++k) stats.wins[k] += r.wins[k];
    stats.no_winner_rounds += r.no_winner;
  }
  stats.empirical_payoffs.resize(n);
  stats.standard_errors.resize(n);
  for (int k = 0; k < n; ++k) {
    const double f = static_cast<double>(stats.wins[k]) / static_cast<double>(rounds);
    stats.empirical_payoffs[k] = f;
    stats.standard_errors[k] = std::sqrt(f * (1.0 - f) / static_cast<double>(rounds));
  }
  return stats;
}

}  // namespace lupi
