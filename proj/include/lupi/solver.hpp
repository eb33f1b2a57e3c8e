// Symmetric equilibrium search by damped Newton iteration on indifference
// residuals.
//
// The unknowns are the first n - 1 probabilities of the common strategy; the
// last is eliminated by normalization. Two residual systems are supported:
//   paper: the derivatives of the closed-form payoff model (paper_gradient);
//   exact: differences between consecutive pure-choice win probabilities
//          under the exact oracle.

#ifndef LUPI_SOLVER_HPP_
#define LUPI_SOLVER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lupi/strategy.hpp"

namespace lupi {

enum class PayoffModel { paper, exact };

std::string_view to_string(PayoffModel model);
std::optional<PayoffModel> parse_payoff_model(std::string_view text);

inline constexpr double kPaperTolerance = 1e-12;
inline constexpr double kExactTolerance = 1e-10;

/// Iterates are kept in [kClampMargin, 1 - kClampMargin] coordinate-wise with
/// their sum at most 1 - kClampMargin.
inline constexpr double kClampMargin = 1e-12;

/// A converged strategy whose smallest entry is below this is reported as
/// leaving the simplex interior.
inline constexpr double kInteriorMargin = 1e-9;

double default_tolerance(PayoffModel model);

struct SolverOptions {
  /// Max-norm residual tolerance; unset means default_tolerance(model).
  std::optional<double> tolerance;
  int max_iterations = 100;
  double jacobian_step = 1e-7;
  int max_halvings = 40;
  /// Retry from restart_grid() points when the first start fails.
  bool restart = true;
  /// First start, either n - 1 free coordinates or a full n-vector. Defaults
  /// to geometric_strategy().
  std::optional<Eigen::VectorXd> initial;
};

struct SolveResult {
  PayoffModel model = PayoffModel::paper;
  bool converged = false;
  /// Set only when converged.
  std::optional<MixedStrategy> strategy;
  /// Per-player payoff when every player adopts `strategy`.
  double payoff = 0.0;
  /// Max-norm of the residual at the best point reached.
  double residual_norm = 0.0;
  /// Newton steps taken by the start that produced this result.
  int iterations = 0;
  /// Number of starting points tried, including the successful one.
  int starts = 0;
  /// False when some probability sits below kInteriorMargin.
  bool interior = false;
};

SolveResult solve_paper_symmetric(const GameSpec& spec, const SolverOptions& options = {});
SolveResult solve_exact_symmetric(const GameSpec& spec, const SolverOptions& options = {});
SolveResult solve_symmetric(const GameSpec& spec, PayoffModel model,
                            const SolverOptions& options = {});

/// Runs every start (initial point, then the whole grid) and returns each
/// distinct converged root once, in discovery order. Roots closer than 1e-8
/// in max-norm are merged.
std::vector<SolveResult> find_symmetric_roots(const GameSpec& spec, PayoffModel model,
                                              const SolverOptions& options = {});

/// Residual of `model` at common strategy `full` (length n, not validated).
Eigen::VectorXd symmetric_residual(PayoffModel model, const Eigen::VectorXd& full);

/// Restart points: every vector of n - 1 coordinates drawn from
/// {0.1, 0.3, 0.5} whose sum is below 1, in lexicographic order.
std::vector<Eigen::VectorXd> restart_grid(const GameSpec& spec);

}  // namespace lupi

#endif  // LUPI_SOLVER_HPP_
