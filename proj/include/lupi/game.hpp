// Adjudication of single rounds and exact expected payoffs.
//
// Three independent routes compute the probability that a player wins:
//   * composition enumeration over opponent count vectors, for opponents that
//     share one strategy;
//   * a capped-count dynamic program over {0, 1, 2+} pick counts per integer,
//     for arbitrary opponents;
//   * full enumeration of all n^n pure outcomes through adjudicate(), kept as a
//     slow cross-check for small n.

#ifndef LUPI_GAME_HPP_
#define LUPI_GAME_HPP_

#include <optional>
#include <span>

#include <Eigen/Core>

#include "lupi/strategy.hpp"

namespace lupi {

/// Winner of one round, or nullopt when no integer was picked exactly once.
///
/// `picks[k]` is the integer chosen by player k and must lie in
/// [1, picks.size()]. The returned index is 0-based.
std::optional<int> adjudicate(std::span<const int> picks);

/// Probability that a player holding `my_pick` wins against `others`.
///
/// Requires exactly spec.n() - 1 opponent strategies of length spec.n().
double exact_pure_vs_mixed(const GameSpec& spec, int my_pick,
                           std::span<const MixedStrategy> others);

/// Win probability for each pure choice 1..n (entry i is choice i + 1)
/// against `others`. Dispatches to the composition enumeration when all
/// opponents are identical and to the capped-count program otherwise.
Eigen::VectorXd pure_choice_payoffs(const GameSpec& spec, std::span<const MixedStrategy> others);

/// Composition enumeration for `opponents` players that all use `common`.
///
/// `common` is not validated, so callers may evaluate the polynomial at
/// unnormalized points (finite-difference Jacobians rely on this).
Eigen::VectorXd win_probabilities_identical(const Eigen::VectorXd& common, int opponents);

/// Capped-count dynamic program; valid for heterogeneous opponents.
Eigen::VectorXd win_probabilities_capped_counts(const GameSpec& spec,
                                                std::span<const MixedStrategy> others);

/// Exact expected payoff of every player under the product distribution.
PayoffVector exact_profile_payoffs(const StrategyProfile& profile);

/// Slow reference: enumerates all n^n outcomes. Only for n <= kMaxEnumerationPlayers.
inline constexpr int kMaxEnumerationPlayers = 8;
PayoffVector enumerate_profile_payoffs(const StrategyProfile& profile);

}  // namespace lupi

#endif  // LUPI_GAME_HPP_
