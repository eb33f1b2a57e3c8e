// Core value types for the lowest unique positive integer (LUPI) game.
//
// A game with n players lets every player pick an integer in [1, n]. Mixed
// strategies are dense probability vectors indexed by choice - 1.

#ifndef LUPI_STRATEGY_HPP_
#define LUPI_STRATEGY_HPP_

#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace lupi {

/// Strategies are accepted when their entries sum to 1 within this bound.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Largest player count the solvers and the command-line tool accept.
inline constexpr int kMaxPlayers = 12;

/// Player count; also the number of available integers.
class GameSpec {
 public:
  explicit GameSpec(int n);

  int n() const { return n_; }
  int opponents() const { return n_ - 1; }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  int n_;
};

/// Probability vector over the pure choices 1..n.
///
/// Construction validates every entry against [0, 1] and the sum against
/// kNormalizationTolerance, then renormalizes so the stored entries sum to 1
/// up to rounding.
class MixedStrategy {
 public:
  explicit MixedStrategy(const Eigen::VectorXd& probs);
  MixedStrategy(std::initializer_list<double> probs);

  /// Plays `choice` (1-based) with certainty.
  static MixedStrategy pure(const GameSpec& spec, int choice);
  static MixedStrategy uniform(const GameSpec& spec);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int index) const { return probs_[index]; }
  /// Probability of picking integer `choice` (1-based).
  double of_choice(int choice) const { return probs_[choice - 1]; }
  const Eigen::VectorXd& probs() const { return probs_; }

  bool is_pure() const;

  friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
    return a.probs_ == b.probs_;
  }

 private:
  Eigen::VectorXd probs_;
};

/// One mixed strategy per player, all over the same n choices.
class StrategyProfile {
 public:
  explicit StrategyProfile(std::vector<MixedStrategy> strategies);

  /// Every one of spec.n() players uses `common`.
  static StrategyProfile symmetric(const GameSpec& spec, const MixedStrategy& common);

  GameSpec spec() const { return GameSpec(n()); }
  int n() const { return static_cast<int>(strategies_.size()); }
  const MixedStrategy& operator[](int player) const { return strategies_[player]; }
  std::span<const MixedStrategy> strategies() const { return strategies_; }

  /// Strategies of every player except `player`, in seat order.
  std::vector<MixedStrategy> others(int player) const;

  bool is_symmetric() const;

 private:
  std::vector<MixedStrategy> strategies_;
};

/// Expected payoff per player.
using PayoffVector = Eigen::VectorXd;

}  // namespace lupi

#endif  // LUPI_STRATEGY_HPP_
