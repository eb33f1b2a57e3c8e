#include "lupi/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lupi {

GameSpec::GameSpec(int n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("player count must be at least 2, got " + std::to_string(n));
  }
}

MixedStrategy::MixedStrategy(const Eigen::VectorXd& probs) : probs_(probs) {
  if (probs_.size() < 2) {
    throw std::invalid_argument("strategy needs at least 2 entries");
  }
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw std::invalid_argument("probability for choice " + std::to_string(i + 1) +
                                  " outside [0, 1]: " + std::to_string(p));
    }
  }
  const double total = probs_.sum();
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(total) +
                                ", not 1");
  }
  probs_ /= total;
}

MixedStrategy::MixedStrategy(std::initializer_list<double> probs)
    : MixedStrategy(Eigen::Map<const Eigen::VectorXd>(probs.begin(),
                                                      static_cast<Eigen::Index>(probs.size()))) {}

MixedStrategy MixedStrategy::pure(const GameSpec& spec, int choice) {
  if (choice < 1 || choice > spec.n()) {
    throw std::invalid_argument("choice " + std::to_string(choice) + " outside [1, " +
                                std::to_string(spec.n()) + "]");
  }
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(spec.n());
  probs[choice - 1] = 1.0;
  return MixedStrategy(probs);
}

MixedStrategy MixedStrategy::uniform(const GameSpec& spec) {
  return MixedStrategy(Eigen::VectorXd::Constant(spec.n(), 1.0 / spec.n()));
}

bool MixedStrategy::is_pure() const { return (probs_.array() == 1.0).any(); }

StrategyProfile::StrategyProfile(std::vector<MixedStrategy> strategies)
    : strategies_(std::move(strategies)) {
  const GameSpec spec(static_cast<int>(strategies_.size()));
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    if (strategies_[i].size() != spec.n()) {
      throw std::invalid_argument("player " + std::to_string(i + 1) + " strategy has " +
                                  std::to_string(strategies_[i].size()) +
                                  " entries, expected " + std::to_string(spec.n()));
    }
  }
}

StrategyProfile StrategyProfile::symmetric(const GameSpec& spec, const MixedStrategy& common) {
  return StrategyProfile(std::vector<MixedStrategy>(static_cast<std::size_t>(spec.n()), common));
}

std::vector<MixedStrategy> StrategyProfile::others(int player) const {
  std::vector<MixedStrategy> result;
  result.reserve(strategies_.size() - 1);
  for (int i = 0; i < n(); ++i) {
    if (i != player) result.push_back(strategies_[i]);
  }
  return result;
}

bool StrategyProfile::is_symmetric() const {
  for (const auto& s : strategies_) {
    if (!(s == strategies_.front())) return false;
  }
  return true;
}

}  // namespace lupi
