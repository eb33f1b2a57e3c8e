#include "lupi/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/QR>

#include "lupi/game.hpp"
#include "lupi/paper_model.hpp"

namespace lupi {
namespace {

constexpr double kRootMergeDistance = 1e-8;

Eigen::VectorXd complete(const Eigen::VectorXd& free) {
  Eigen::VectorXd full(free.size() + 1);
  full.head(free.size()) = free;
  full[free.size()] = 1.0 - free.sum();
  return full;
}

Eigen::VectorXd clamp_to_simplex(Eigen::VectorXd x) {
  x = x.cwiseMax(kClampMargin).cwiseMin(1.0 - kClampMargin);
  const double total = x.sum();
  if (total > 1.0 - kClampMargin) x *= (1.0 - kClampMargin) / total;
  return x;
}

double max_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

struct Attempt {
  Eigen::VectorXd free;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

class NewtonSolver {
 public:
  NewtonSolver(PayoffModel model, const SolverOptions& options)
      : model_(model), options_(options),
        tolerance_(options.tolerance.value_or(default_tolerance(model))) {}

  Attempt run(const Eigen::VectorXd& start) const {
    Attempt a;
    a.free = clamp_to_simplex(start);
    Eigen::VectorXd f = residual(a.free);
    a.residual_norm = max_norm(f);
    for (;;) {
      if (!std::isfinite(a.residual_norm)) return a;
      if (accepts(a.free, a.residual_norm)) {
        a.converged = true;
        return a;
      }
      if (a.iterations >= options_.max_iterations) return a;

      const Eigen::VectorXd step = jacobian(a.free).colPivHouseholderQr().solve(-f);
      if (!step.allFinite()) return a;

      bool accepted = false;
      double scale = 1.0;
      for (int h = 0; h <= options_.max_halvings; ++h, scale *= 0.5) {
        const Eigen::VectorXd trial = clamp_to_simplex(a.free + scale * step);
        const Eigen::VectorXd trial_f = residual(trial);
        const double trial_norm = max_norm(trial_f);
        if (trial_norm < a.residual_norm) {
          a.free = trial;
          f = trial_f;
          a.residual_norm = trial_norm;
          accepted = true;
          break;
        }
      }
      ++a.iterations;
      if (!accepted) return a;
    }
  }

  double tolerance() const { return tolerance_; }

 private:
  Eigen::VectorXd residual(const Eigen::VectorXd& free) const {
    return symmetric_residual(model_, complete(free));
  }

  bool accepts(const Eigen::VectorXd& free, double residual_norm) const {
    if (residual_norm > tolerance_) return false;
    if (model_ == PayoffModel::paper) return true;
    // Consecutive differences can each be small while their sum drifts.
    const Eigen::VectorXd values =
        win_probabilities_identical(complete(free), static_cast<int>(free.size()));
    return values.maxCoeff() - values.minCoeff() <= tolerance_;
  }

  // Central differences.
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& free) const {
    const Eigen::Index d = free.size();
    Eigen::MatrixXd jac(d, d);
    const double h = options_.jacobian_step;
    for (Eigen::Index k = 0; k < d; ++k) {
      Eigen::VectorXd plus = free, minus = free;
      plus[k] += h;
      minus[k] -= h;
      jac.col(k) = (residual(plus) - residual(minus)) / (2.0 * h);
    }
    return jac;
  }

  PayoffModel model_;
  SolverOptions options_;
  double tolerance_;
};

void check_range(const GameSpec& spec) {
  if (spec.n() < 3 || spec.n() > kMaxPlayers) {
    throw std::invalid_argument("symmetric solver supports 3 <= n <= " +
                                std::to_string(kMaxPlayers) + ", got " +
                                std::to_string(spec.n()));
  }
}

Eigen::VectorXd initial_point(const GameSpec& spec, const SolverOptions& options) {
  if (!options.initial) return geometric_strategy(spec).probs().head(spec.n() - 1);
  const Eigen::VectorXd& given = *options.initial;
  if (given.size() == spec.n()) return given.head(spec.n() - 1);
  if (given.size() == spec.n() - 1) return given;
  throw std::invalid_argument("initial point must have n - 1 or n entries");
}

SolveResult make_result(const GameSpec& spec, PayoffModel model, const Attempt& a, int starts) {
  SolveResult r;
  r.model = model;
  r.converged = a.converged;
  r.residual_norm = a.residual_norm;
  r.iterations = a.iterations;
  r.starts = starts;
  const Eigen::VectorXd full = complete(a.free);
  r.interior = full.minCoeff() >= kInteriorMargin;
  if (!a.converged) return r;
  r.strategy = MixedStrategy(full);
  const Eigen::VectorXd& p = r.strategy->probs();
  if (model == PayoffModel::paper) {
    r.payoff = paper_payoff(p, p);
  } else {
    r.payoff = p.dot(win_probabilities_identical(p, spec.opponents()));
  }
  return r;
}

}  // namespace

std::string_view to_string(PayoffModel model) {
  return model == PayoffModel::paper ? "paper" : "exact";
}

std::optional<PayoffModel> parse_payoff_model(std::string_view text) {
  if (text == "paper") return PayoffModel::paper;
  if (text == "exact") return PayoffModel::exact;
  return std::nullopt;
}

double default_tolerance(PayoffModel model) {
  return model == PayoffModel::paper ? kPaperTolerance : kExactTolerance;
}

Eigen::VectorXd symmetric_residual(PayoffModel model, const Eigen::VectorXd& full) {
  if (model == PayoffModel::paper) return paper_gradient(full);
  const Eigen::VectorXd values =
      win_probabilities_identical(full, static_cast<int>(full.size()) - 1);
  const Eigen::Index d = full.size() - 1;
  return values.tail(d) - values.head(d);
}

std::vector<Eigen::VectorXd> restart_grid(const GameSpec& spec) {
  static constexpr int kTenths[] = {1, 3, 5};
  const int d = spec.n() - 1;
  std::vector<Eigen::VectorXd> grid;
  std::vector<int> digits(d, 0);
  for (;;) {
    int tenths = 0;
    for (int k = 0; k < d; ++k) tenths += kTenths[digits[k]];
    if (tenths < 10) {
      Eigen::VectorXd point(d);
      for (int k = 0; k < d; ++k) point[k] = kTenths[digits[k]] / 10.0;
      grid.push_back(point);
    }
    int k = d - 1;
    while (k >= 0 && digits[k] == 2) digits[k--] = 0;
    if (k < 0) break;
    ++digits[k];
  }
  return grid;
}

SolveResult solve_symmetric(const GameSpec& spec, PayoffModel model,
                            const SolverOptions& options) {
  check_range(spec);
  const NewtonSolver solver(model, options);
  Attempt best = solver.run(initial_point(spec, options));
  int starts = 1;
  if (best.converged || !options.restart) return make_result(spec, model, best, starts);
  for (const auto& point : restart_grid(spec)) {
    const Attempt a = solver.run(point);
    ++starts;
    if (a.converged) return make_result(spec, model, a, starts);
    if (a.residual_norm < best.residual_norm) best = a;
  }
  return make_result(spec, model, best, starts);
}

SolveResult solve_paper_symmetric(const GameSpec& spec, const SolverOptions& options) {
  return solve_symmetric(spec, PayoffModel::paper, options);
}

SolveResult solve_exact_symmetric(const GameSpec& spec, const SolverOptions& options) {
  return solve_symmetric(spec, PayoffModel::exact, options);
}

std::vector<SolveResult> find_symmetric_roots(const GameSpec& spec, PayoffModel model,
                                              const SolverOptions& options) {
  check_range(spec);
  const NewtonSolver solver(model, options);
  std::vector<Eigen::VectorXd> starts{initial_point(spec, options)};
  for (auto& point : restart_grid(spec)) starts.push_back(std::move(point));

  std::vector<SolveResult> roots;
  int tried = 0;
  for (const auto& start : starts) {
    const Attempt a = solver.run(start);
    ++tried;
    if (!a.converged) continue;
    SolveResult r = make_result(spec, model, a, tried);
    bool seen = false;
    for (const auto& root : roots) {
      if (max_norm(root.strategy->probs() - r.strategy->probs()) <= kRootMergeDistance) {
        seen = true;
        break;
      }
    }
    if (!seen) roots.push_back(std::move(r));
  }
  return roots;
}

}  // namespace lupi
