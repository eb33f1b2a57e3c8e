#include "lupi/game.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lupi {
namespace {

void check_opponents(const GameSpec& spec, std::span<const MixedStrategy> others) {
  if (static_cast<int>(others.size()) != spec.opponents()) {
    throw std::invalid_argument("expected " + std::to_string(spec.opponents()) +
                                " opponent strategies, got " + std::to_string(others.size()));
  }
  for (std::size_t k = 0; k < others.size(); ++k) {
    if (others[k].size() != spec.n()) {
      throw std::invalid_argument("opponent " + std::to_string(k + 1) + " strategy has " +
                                  std::to_string(others[k].size()) + " entries, expected " +
                                  std::to_string(spec.n()));
    }
  }
}

bool all_identical(std::span<const MixedStrategy> others) {
  for (const auto& s : others) {
    if (!(s == others.front())) return false;
  }
  return true;
}

double power(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Probability that no opponent picks `pick` (0-based) and no integer below it
// is picked by exactly one opponent. Opponents above `pick` are lumped into a
// single outcome, which leaves the multinomial sum unchanged.
double identical_win_probability(const Eigen::VectorXd& p, int opponents, int pick) {
  const int n = static_cast<int>(p.size());
  double above = 0.0;
  for (int k = pick + 1; k < n; ++k) above += p[k];

  std::vector<double> inv_factorial(opponents + 1, 1.0);
  double factorial = 1.0;
  for (int c = 1; c <= opponents; ++c) {
    factorial *= c;
    inv_factorial[c] = 1.0 / factorial;
  }

  // Counts below `pick` range over {0} and {2, ..., remaining}.
  std::function<double(int, int)> visit = [&](int j, int remaining) -> double {
    if (j == pick) return power(above, remaining) * inv_factorial[remaining];
    double total = visit(j + 1, remaining);
    double term = p[j];
    for (int c = 2; c <= remaining; ++c) {
      term *= p[j];
      total += term * inv_factorial[c] * visit(j + 1, remaining - c);
    }
    return total;
  };
  return factorial * visit(0, opponents);
}

int ipow3(int n) {
  int r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

}  // namespace

std::optional<int> adjudicate(std::span<const int> picks) {
  const int n = static_cast<int>(picks.size());
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < picks.size(); ++k) {
    if (picks[k] < 1 || picks[k] > n) {
      throw std::invalid_argument("player " + std::to_string(k + 1) + " picked " +
                                  std::to_string(picks[k]) + ", outside [1, " +
                                  std::to_string(n) + "]");
    }
    ++count[picks[k]];
  }
  for (int v = 1; v <= n; ++v) {
    if (count[v] != 1) continue;
    for (int k = 0; k < n; ++k) {
      if (picks[k] == v) return k;
    }
  }
  return std::nullopt;
}

Eigen::VectorXd win_probabilities_identical(const Eigen::VectorXd& common, int opponents) {
  Eigen::VectorXd values(common.size());
  for (int i = 0; i < common.size(); ++i) {
    values[i] = identical_win_probability(common, opponents, i);
  }
  return values;
}

Eigen::VectorXd win_probabilities_capped_counts(const GameSpec& spec,
                                                std::span<const MixedStrategy> others) {
  check_opponents(spec, others);
  const int n = spec.n();
  const int states = ipow3(n);
  std::vector<int> place(n);
  for (int j = 0, w = 1; j < n; ++j, w *= 3) place[j] = w;

  // Each state stores, per integer j, digit j in base 3: picked 0, 1 or 2+ times.
  std::vector<double> dist(states, 0.0), next(states, 0.0);
  dist[0] = 1.0;
  for (const auto& opponent : others) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int s = 0; s < states; ++s) {
      if (dist[s] == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        const double pj = opponent[j];
        if (pj == 0.0) continue;
        const int digit = (s / place[j]) % 3;
        const int target = digit == 2 ? s : s + place[j];
        next[target] += dist[s] * pj;
      }
    }
    dist.swap(next);
  }

  Eigen::VectorXd values = Eigen::VectorXd::Zero(n);
  for (int s = 0; s < states; ++s) {
    if (dist[s] == 0.0) continue;
    // A pick wins if it is untouched and lies below the opponents' lowest unique integer.
    for (int j = 0, rest = s; j < n; ++j, rest /= 3) {
      const int digit = rest % 3;
      if (digit == 1) break;
      if (digit == 0) values[j] += dist[s];
    }
  }
  return values;
}

Eigen::VectorXd pure_choice_payoffs(const GameSpec& spec, std::span<const MixedStrategy> others) {
  check_opponents(spec, others);
  if (all_identical(others)) {
    return win_probabilities_identical(others.front().probs(), spec.opponents());
  }
  return win_probabilities_capped_counts(spec, others);
}

double exact_pure_vs_mixed(const GameSpec& spec, int my_pick,
                           std::span<const MixedStrategy> others) {
  if (my_pick < 1 || my_pick > spec.n()) {
    throw std::invalid_argument("pick " + std::to_string(my_pick) + " outside [1, " +
                                std::to_string(spec.n()) + "]");
  }
  check_opponents(spec, others);
  if (all_identical(others)) {
    return identical_win_probability(others.front().probs(), spec.opponents(), my_pick - 1);
  }
  return win_probabilities_capped_counts(spec, others)[my_pick - 1];
}

PayoffVector exact_profile_payoffs(const StrategyProfile& profile) {
  const GameSpec spec = profile.spec();
  PayoffVector payoffs(spec.n());
  if (profile.is_symmetric()) {
    const Eigen::VectorXd values = pure_choice_payoffs(spec, profile.others(0));
    payoffs.setConstant(profile[0].probs().dot(values));
    return payoffs;
  }
  for (int player = 0; player < spec.n(); ++player) {
    const Eigen::VectorXd values = pure_choice_payoffs(spec, profile.others(player));
    payoffs[player] = profile[player].probs().dot(values);
  }
  return payoffs;
}

PayoffVector enumerate_profile_payoffs(const StrategyProfile& profile) {
  const int n = profile.n();
  if (n > kMaxEnumerationPlayers) {
    throw std::invalid_argument("full enumeration supports n <= " +
                                std::to_string(kMaxEnumerationPlayers));
  }
  PayoffVector payoffs = PayoffVector::Zero(n);
  std::vector<int> picks(n, 1);
  while (true) {
    double prob = 1.0;
    for (int k = 0; k < n; ++k) prob *= profile[k].of_choice(picks[k]);
    if (prob != 0.0) {
      if (const auto winner = adjudicate(picks)) payoffs[*winner] += prob;
    }
    int k = 0;
    while (k < n && picks[k] == n) picks[k++] = 1;
    if (k == n) break;
    ++picks[k];
  }
  return payoffs;
}

}  // namespace lupi
