// Best responses and equilibrium verification.
//
// Expected payoff is linear in a player's own mixed strategy, so the best
// deviation is always attained at a pure choice and checking pure choices is
// enough to decide whether a profile is a Nash equilibrium.

#ifndef LUPI_ANALYSIS_HPP_
#define LUPI_ANALYSIS_HPP_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "lupi/solver.hpp"
#include "lupi/strategy.hpp"

namespace lupi {

inline constexpr double kDefaultEpsilon = 1e-9;
inline constexpr double kTieTolerance = 1e-12;

struct BestResponse {
  /// Win probability of each pure choice; entry i is choice i + 1.
  Eigen::VectorXd values;
  /// Every choice (1-based) within kTieTolerance of the maximum, ascending.
  std::vector<int> best_choices;

  double best_value() const { return values.maxCoeff(); }
};

/// Exact best response to n - 1 opponent strategies.
BestResponse best_response(const GameSpec& spec, std::span<const MixedStrategy> others);

struct VerificationReport {
  StrategyProfile profile;
  PayoffModel model = PayoffModel::exact;
  double epsilon = kDefaultEpsilon;
  PayoffVector payoffs;
  Eigen::VectorXd best_response_values;
  /// best_response_values - payoffs.
  Eigen::VectorXd deviation_gains;
  std::vector<std::vector<int>> best_choices;
  /// Some pure choice other than the player's current strategy earns the
  /// current payoff within epsilon, so the equilibrium holds only weakly.
  std::vector<bool> indifferent_deviations;
  bool is_nash = false;
  double payoff_sum = 0.0;
  /// payoff_sum within epsilon of 1. A winner is paid in every round, so no
  /// player can gain without another losing.
  bool is_payoff_sum_maximal = false;

  double max_gain() const { return deviation_gains.maxCoeff(); }
};

/// Checks every unilateral pure deviation of every player.
///
/// PayoffModel::paper evaluates payoffs with the closed-form model, which is
/// only defined for symmetric profiles; heterogeneous profiles are rejected.
VerificationReport verify_profile(const StrategyProfile& profile,
                                  double epsilon = kDefaultEpsilon,
                                  PayoffModel model = PayoffModel::exact);

/// Max minus min of the pure-choice payoffs of a deviator whose n - 1
/// opponents all play `common`.
double indifference_spread(const GameSpec& spec, const MixedStrategy& common, PayoffModel model);

/// Pure-choice payoffs against common opponents under `model`.
Eigen::VectorXd model_choice_values(const GameSpec& spec, const MixedStrategy& common,
                                    PayoffModel model);

}  // namespace lupi

#endif  // LUPI_ANALYSIS_HPP_
