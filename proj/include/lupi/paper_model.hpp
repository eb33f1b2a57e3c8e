// Closed-form payoff model for a deviator facing n - 1 opponents that share
// one mixed strategy, together with the geometric approximate strategy.
//
// The model credits a deviator holding integer i with a win only when every
// opponent picks above i, or when all opponents pick the same integer below i.
// That is the exact win probability for n = 3; for n >= 4 it leaves out
// configurations such as opponents {1, 1, 3} against a deviator on 2. The
// exact payoffs live in game.hpp.
//
// The templates evaluate any dense Eigen column vector and do not validate
// normalization: the last entry of each argument is always replaced by one
// minus the sum of the others.

#ifndef LUPI_PAPER_MODEL_HPP_
#define LUPI_PAPER_MODEL_HPP_

#include <Eigen/Core>

#include "lupi/strategy.hpp"

namespace lupi {

namespace internal {

template <typename Scalar>
Scalar ipow(Scalar base, int exponent) {
  Scalar result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace internal

/// Model win value of each pure choice 1..n against common opponent strategy
/// `opponents`. Only the first n - 1 entries are read.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> paper_choice_values(
    const Eigen::MatrixBase<Derived>& opponents) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = opponents.size();
  const int m = static_cast<int>(n) - 1;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values(n);

  Scalar cumulative(0);        // sum_{j <= i} p_j
  Scalar power_sum_below(0);   // sum_{j < i} p_j^m
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    cumulative += opponents(i);
    values(i) = internal::ipow<Scalar>(Scalar(1) - cumulative, m) + power_sum_below;
    power_sum_below += internal::ipow<Scalar>(opponents(i), m);
  }
  values(n - 1) = power_sum_below;
  return values;
}

/// Expected winnings of a deviator playing `mine` against opponents that all
/// play `opponents`, with both last entries recovered from normalization.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar paper_payoff(const Eigen::MatrixBase<DerivedA>& mine,
                                       const Eigen::MatrixBase<DerivedB>& opponents) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = mine.size();
  const auto values = paper_choice_values(opponents);
  const Scalar head_mass = mine.head(n - 1).sum();
  return mine.head(n - 1).dot(values.head(n - 1)) + (Scalar(1) - head_mass) * values(n - 1);
}

/// Derivatives of paper_payoff with respect to the first n - 1 entries of
/// `mine`. They do not depend on `mine`.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> paper_gradient(
    const Eigen::MatrixBase<Derived>& opponents) {
  const auto values = paper_choice_values(opponents);
  const Eigen::Index n = values.size();
  return (values.head(n - 1).array() - values(n - 1)).matrix();
}

// Validating overloads for strategies of a game.

double paper_payoff(const GameSpec& spec, const MixedStrategy& mine,
                    const MixedStrategy& opponents_common);

/// Residual vector of length n - 1.
Eigen::VectorXd paper_gradient(const GameSpec& spec, const MixedStrategy& opponents_common);

/// pi_i = 2^-i for i < n and pi_n = pi_{n-1}.
MixedStrategy geometric_strategy(const GameSpec& spec);

/// Per-player payoff when everyone plays geometric_strategy(), by the printed
/// double sum. Defined for n >= 3.
double approx_payoff(const GameSpec& spec);

/// 1 / 2^(n-1): the payoff when every player mixes evenly over 1 and 2.
double reference_payoff(const GameSpec& spec);

}  // namespace lupi

#endif  // LUPI_PAPER_MODEL_HPP_
