#include "lupi/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lupi/game.hpp"
#include "lupi/paper_model.hpp"

namespace lupi {
namespace {

std::vector<int> maximizers(const Eigen::VectorXd& values) {
  const double best = values.maxCoeff();
  std::vector<int> choices;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] >= best - kTieTolerance) choices.push_back(static_cast<int>(i) + 1);
  }
  return choices;
}

}  // namespace

BestResponse best_response(const GameSpec& spec, std::span<const MixedStrategy> others) {
  BestResponse br;
  br.values = pure_choice_payoffs(spec, others);
  br.best_choices = maximizers(br.values);
  return br;
}

Eigen::VectorXd model_choice_values(const GameSpec& spec, const MixedStrategy& common,
                                    PayoffModel model) {
  if (common.size() != spec.n()) {
    throw std::invalid_argument("strategy has " + std::to_string(common.size()) +
                                " entries, expected " + std::to_string(spec.n()));
  }
  if (model == PayoffModel::paper) return paper_choice_values(common.probs());
  return win_probabilities_identical(common.probs(), spec.opponents());
}

double indifference_spread(const GameSpec& spec, const MixedStrategy& common, PayoffModel model) {
  const Eigen::VectorXd values = model_choice_values(spec, common, model);
  return values.maxCoeff() - values.minCoeff();
}

VerificationReport verify_profile(const StrategyProfile& profile, double epsilon,
                                  PayoffModel model) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (model == PayoffModel::paper && !profile.is_symmetric()) {
    throw std::invalid_argument("the closed-form model only covers symmetric profiles");
  }
  const GameSpec spec = profile.spec();
  const int n = spec.n();

  VerificationReport report{profile,
                            model,
                            epsilon,
                            PayoffVector(n),
                            Eigen::VectorXd(n),
                            Eigen::VectorXd(n),
                            std::vector<std::vector<int>>(n),
                            std::vector<bool>(n, false)};

  for (int player = 0; player < n; ++player) {
    const Eigen::VectorXd values =
        model == PayoffModel::paper
            ? model_choice_values(spec, profile[player], model)
            : pure_choice_payoffs(spec, profile.others(player));
    const MixedStrategy& own = profile[player];
    const double payoff = model == PayoffModel::paper ? paper_payoff(own.probs(), own.probs())
                                                      : own.probs().dot(values);
    report.payoffs[player] = payoff;
    report.best_response_values[player] = values.maxCoeff();
    report.deviation_gains[player] = values.maxCoeff() - payoff;
    report.best_choices[player] = maximizers(values);
    for (int i = 0; i < n; ++i) {
      if (own[i] != 1.0 && std::abs(values[i] - payoff) <= epsilon) {
        report.indifferent_deviations[player] = true;
      }
    }
  }
  report.is_nash = report.max_gain() <= epsilon;
  report.payoff_sum = report.payoffs.sum();
  report.is_payoff_sum_maximal = std::abs(report.payoff_sum - 1.0) <= epsilon;
  return report;
}

}  // namespace lupi
