#include "lupi/paper_model.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "lupi/game.hpp"
#include "oracles.hpp"

using namespace lupi;
using lupi::testing::ne3;
using lupi::testing::ne3_payoff;
using lupi::testing::random_simplex_point;
using lupi::testing::random_strategy;

namespace {

// Deviator payoff from the exact oracle, weighting pure choices by `mine`.
double exact_deviator_payoff(const MixedStrategy& mine, const MixedStrategy& common) {
  const int n = mine.size();
  const std::vector<MixedStrategy> others(n - 1, common);
  double total = 0.0;
  for (int pick = 1; pick <= n; ++pick) {
    total += mine.of_choice(pick) * exact_pure_vs_mixed(GameSpec(n), pick, others);
  }
  return total;
}

}  // namespace

TEST_CASE("paper_payoff examples") {
  CHECK(std::abs(paper_payoff(GameSpec(3), ne3(), ne3()) - ne3_payoff()) <= 1e-12);
  CHECK(std::abs(ne3_payoff() - 0.287187) <= 5e-7);

  const MixedStrategy opp{2.0 / 3.0, 0.0, 1.0 / 3.0, 0.0};
  const MixedStrategy two = MixedStrategy::pure(GameSpec(4), 2);
  CHECK(std::abs(paper_payoff(GameSpec(4), two, opp) - 1.0 / 3.0) <= 1e-12);

  const MixedStrategy one = MixedStrategy::pure(GameSpec(3), 1);
  CHECK(paper_payoff(GameSpec(3), one, one) == 0.0);

  CHECK_THROWS_AS(paper_payoff(GameSpec(3), one, MixedStrategy::pure(GameSpec(4), 1)),
                  std::invalid_argument);
}

TEST_CASE("paper_gradient examples") {
  const Eigen::VectorXd at_ne = paper_gradient(GameSpec(3), ne3());
  REQUIRE(at_ne.size() == 2);
  CHECK(at_ne.cwiseAbs().maxCoeff() <= 1e-12);

  const Eigen::VectorXd at_one = paper_gradient(GameSpec(3), MixedStrategy{1, 0, 0});
  CHECK(at_one[0] == doctest::Approx(-1.0));

  const Eigen::VectorXd at_half = paper_gradient(GameSpec(3), MixedStrategy{0.5, 0.5, 0});
  CHECK(std::abs(at_half[0] + 0.25) <= 1e-15);
  CHECK(std::abs(at_half[1] + 0.25) <= 1e-15);
}

TEST_CASE("paper_gradient reduces to the printed n = 3 derivatives") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd p = random_simplex_point(3, rng);
    const double p1 = p[0], p2 = p[1];
    const Eigen::VectorXd g = paper_gradient(p);
    CHECK(std::abs(g[0] - (1 - 2 * p1 - p2 * p2)) <= 1e-12);
    CHECK(std::abs(g[1] - (1 - 2 * p1 + p1 * p1 - 2 * p2 + 2 * p1 * p2)) <= 1e-12);
  }
}

TEST_CASE("paper_gradient matches centered finite differences of paper_payoff") {
  std::mt19937_64 rng(8);
  const double h = 1e-6;
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd p = random_simplex_point(n, rng);
      const Eigen::VectorXd mine = random_simplex_point(n, rng);
      const Eigen::VectorXd g = paper_gradient(p);
      for (int i = 0; i < n - 1; ++i) {
        Eigen::VectorXd plus = mine, minus = mine;
        plus[i] += h;
        minus[i] -= h;
        const double fd = (paper_payoff(plus, p) - paper_payoff(minus, p)) / (2 * h);
        CHECK(std::abs(fd - g[i]) <= 1e-6);
      }
    }
  }
}

TEST_CASE("paper_payoff is exact at n = 3") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const MixedStrategy mine = random_strategy(3, rng, trial % 4 == 0);
    const MixedStrategy common = random_strategy(3, rng, trial % 3 == 0);
    CHECK(std::abs(paper_payoff(GameSpec(3), mine, common) -
                   exact_deviator_payoff(mine, common)) <= 1e-12);
  }
}

TEST_CASE("paper_payoff omits mixed opponent configurations from n = 4") {
  const MixedStrategy opp{2.0 / 3.0, 0.0, 1.0 / 3.0, 0.0};
  const MixedStrategy two = MixedStrategy::pure(GameSpec(4), 2);
  const double model = paper_payoff(GameSpec(4), two, opp);
  const double exact = exact_deviator_payoff(two, opp);
  CHECK(std::abs(model - 1.0 / 3.0) <= 1e-12);
  CHECK(std::abs(exact - 7.0 / 9.0) <= 1e-12);
}

TEST_CASE("paper_payoff is linear in the deviator strategy") {
  std::mt19937_64 rng(4);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd a = random_simplex_point(n, rng);
      const Eigen::VectorXd b = random_simplex_point(n, rng);
      const Eigen::VectorXd p = random_simplex_point(n, rng);
      const double t = std::uniform_real_distribution<double>(0, 1)(rng);
      const double mixed = paper_payoff(Eigen::VectorXd(t * a + (1 - t) * b), p);
      const double combined = t * paper_payoff(a, p) + (1 - t) * paper_payoff(b, p);
      CHECK(std::abs(mixed - combined) <= 1e-14);
    }
  }
}

TEST_CASE("templates evaluate at extended precision") {
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const long double r3 = std::sqrt(3.0L);
  Vec p(3);
  p << 2 * r3 - 3, 2 - r3, 2 - r3;
  const Vec g = paper_gradient(p);
  CHECK(std::abs(static_cast<double>(g[0])) <= 1e-17);
  CHECK(std::abs(static_cast<double>(g[1])) <= 1e-17);
  const long double payoff = paper_payoff(p, p);
  CHECK(std::abs(static_cast<double>(payoff - 4 * (7 - 4 * r3))) <= 1e-17);
}

TEST_CASE("geometric_strategy") {
  CHECK(geometric_strategy(GameSpec(3)).probs().isApprox(lupi::testing::to_vector({0.5, 0.25, 0.25})));
  CHECK(geometric_strategy(GameSpec(4)).probs().isApprox(
      lupi::testing::to_vector({0.5, 0.25, 0.125, 0.125})));
  CHECK(geometric_strategy(GameSpec(2)).probs().isApprox(lupi::testing::to_vector({0.5, 0.5})));
  for (int n = 2; n <= 40; ++n) {
    const MixedStrategy s = geometric_strategy(GameSpec(n));
    CHECK(s.probs().sum() == 1.0);
    CHECK(s[n - 1] == s[n - 2]);
  }
}

TEST_CASE("approx_payoff and reference_payoff") {
  CHECK(approx_payoff(GameSpec(3)) == 9.0 / 32.0);
  CHECK(std::abs(approx_payoff(GameSpec(4)) - 0.133) < 0.0005);
  CHECK(std::abs(approx_payoff(GameSpec(8)) - 0.00784) < 0.000005);
  CHECK_THROWS_AS(approx_payoff(GameSpec(2)), std::invalid_argument);

  CHECK(reference_payoff(GameSpec(3)) == 0.25);
  CHECK(reference_payoff(GameSpec(6)) == 0.03125);
  CHECK(reference_payoff(GameSpec(2)) == 0.5);

  for (int n = 3; n <= 8; ++n) CHECK(approx_payoff(GameSpec(n)) > reference_payoff(GameSpec(n)));
}

TEST_CASE("approx_payoff equals the closed-form model at the geometric strategy") {
  // The printed double sum is paper_payoff with everyone on the geometric strategy.
  for (int n = 3; n <= 12; ++n) {
    const MixedStrategy g = geometric_strategy(GameSpec(n));
    CHECK(std::abs(approx_payoff(GameSpec(n)) - paper_payoff(GameSpec(n), g, g)) <= 1e-15);
  }
}
