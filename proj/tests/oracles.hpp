// Test-only reference computations. These deliberately avoid the library's
// adjudication and enumeration code so they can check it independently.

#ifndef LUPI_TESTS_ORACLES_HPP_
#define LUPI_TESTS_ORACLES_HPP_

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "lupi/strategy.hpp"

namespace lupi::testing {

// Lowest value held by exactly one entry, or 0 when there is none.
inline int lowest_unique_value(const std::vector<int>& picks, int n) {
  for (int v = 1; v <= n; ++v) {
    int count = 0;
    for (int p : picks) count += (p == v);
    if (count == 1) return v;
  }
  return 0;
}

// Probability that a deviator on `my_pick` wins, by walking all n^(n-1)
// opponent pick vectors.
inline double brute_force_win(int n, int my_pick, const std::vector<Eigen::VectorXd>& others) {
  const int m = static_cast<int>(others.size());
  std::vector<int> picks(m, 1);
  double total = 0.0;
  for (;;) {
    double prob = 1.0;
    for (int k = 0; k < m; ++k) prob *= others[k][picks[k] - 1];
    if (prob > 0.0) {
      std::vector<int> all = picks;
      all.push_back(my_pick);
      if (lowest_unique_value(all, n) == my_pick) total += prob;
    }
    int k = 0;
    while (k < m && picks[k] == n) picks[k++] = 1;
    if (k == m) break;
    ++picks[k];
  }
  return total;
}

// Random point of the probability simplex; roughly a third of the entries
// are zeroed when `sparse` is set.
inline Eigen::VectorXd random_simplex_point(int n, std::mt19937_64& rng, bool sparse = false) {
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution drop(1.0 / 3.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = (sparse && drop(rng)) ? 0.0 : expo(rng);
  if (v.sum() == 0.0) v[0] = 1.0;
  return v / v.sum();
}

inline MixedStrategy random_strategy(int n, std::mt19937_64& rng, bool sparse = false) {
  return MixedStrategy(random_simplex_point(n, rng, sparse));
}

inline Eigen::VectorXd to_vector(std::initializer_list<double> values) {
  return Eigen::Map<const Eigen::VectorXd>(values.begin(), static_cast<Eigen::Index>(values.size()));
}

// Symmetric n = 3 equilibrium in closed form.
inline MixedStrategy ne3() {
  const double r3 = std::sqrt(3.0);
  return MixedStrategy{2.0 * r3 - 3.0, 2.0 - r3, 2.0 - r3};
}

inline double ne3_payoff() { return 4.0 * (7.0 - 4.0 * std::sqrt(3.0)); }

}  // namespace lupi::testing

#endif  // LUPI_TESTS_ORACLES_HPP_
