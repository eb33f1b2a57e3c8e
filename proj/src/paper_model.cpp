#include "lupi/paper_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lupi {
namespace {

void check_length(const GameSpec& spec, const MixedStrategy& s, const char* what) {
  if (s.size() != spec.n()) {
    throw std::invalid_argument(std::string(what) + " strategy has " + std::to_string(s.size()) +
                                " entries, expected " + std::to_string(spec.n()));
  }
}

}  // namespace

double paper_payoff(const GameSpec& spec, const MixedStrategy& mine,
                    const MixedStrategy& opponents_common) {
  check_length(spec, mine, "deviator");
  check_length(spec, opponents_common, "opponent");
  return paper_payoff(mine.probs(), opponents_common.probs());
}

Eigen::VectorXd paper_gradient(const GameSpec& spec, const MixedStrategy& opponents_common) {
  check_length(spec, opponents_common, "opponent");
  return paper_gradient(opponents_common.probs());
}

MixedStrategy geometric_strategy(const GameSpec& spec) {
  const int n = spec.n();
  Eigen::VectorXd probs(n);
  for (int i = 1; i < n; ++i) probs[i - 1] = std::ldexp(1.0, -i);
  probs[n - 1] = probs[n - 2];
  return MixedStrategy(probs);
}

double approx_payoff(const GameSpec& spec) {
  const int n = spec.n();
  if (n < 3) {
    throw std::invalid_argument("approximate payoff is defined for n >= 3, got " +
                                std::to_string(n));
  }
  const int m = n - 1;
  double total = 0.0;
  for (int k = 1; k <= n - 1; ++k) {
    double inner = 0.0;
    for (int j = 1; j <= k; ++j) inner += internal::ipow(std::ldexp(1.0, -j), m);
    total += std::ldexp(1.0, -k) * inner;
  }
  double tail = 0.0;
  for (int j = 1; j <= n - 1; ++j) tail += internal::ipow(std::ldexp(1.0, -j), m);
  return total + std::ldexp(1.0, -(n - 1)) * tail;
}

double reference_payoff(const GameSpec& spec) { return std::ldexp(1.0, -(spec.n() - 1)); }

}  // namespace lupi
