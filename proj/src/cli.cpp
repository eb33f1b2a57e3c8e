#include "lupi/cli.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lupi/analysis.hpp"
#include "lupi/format.hpp"
#include "lupi/game.hpp"
#include "lupi/montecarlo.hpp"
#include "lupi/paper_model.hpp"
#include "lupi/profile_io.hpp"
#include "lupi/solver.hpp"

namespace lupi::cli {
namespace {

using json = nlohmann::json;

enum class Format { text, csv, json };

constexpr int kMaxApproxPlayers = 60;

// Usage problems detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::string choices_text(const std::vector<int>& choices, const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (i > 0) out += separator;
    out += std::to_string(choices[i]);
  }
  return out;
}

std::string fixed_list(const Eigen::VectorXd& v, int decimals) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_fixed(v[i], decimals);
  }
  return out;
}

std::string csv_header(const std::string& prefix, int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) out += "," + prefix + std::to_string(i);
  return out;
}

MixedStrategy parse_strategy_list(const std::string& text, int n) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw UsageError("cannot parse probability '" + item + "' in '" + text + "'");
    }
    values.push_back(v);
  }
  if (static_cast<int>(values.size()) != n) {
    throw UsageError("strategy '" + text + "' has " + std::to_string(values.size()) +
                     " entries, expected " + std::to_string(n));
  }
  return MixedStrategy(Eigen::Map<const Eigen::VectorXd>(values.data(), n));
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  int n = 0;
  std::string model = "paper";
  std::optional<double> tol;
  int max_iterations = SolverOptions{}.max_iterations;
  bool all_roots = false;
  std::string profile_out;
};

json solve_json(const SolveResult& r, int n) {
  json j;
  j["model"] = std::string(to_string(r.model));
  j["n"] = n;
  j["converged"] = r.converged;
  j["strategy"] = r.strategy ? json(to_std(r.strategy->probs())) : json(nullptr);
  j["payoff"] = r.converged ? json(r.payoff) : json(nullptr);
  j["residual_norm"] = r.residual_norm;
  j["iterations"] = r.iterations;
  j["starts"] = r.starts;
  j["interior"] = r.interior;
  return j;
}

void solve_text(const SolveResult& r, int n, std::ostream& out) {
  out << "model:      " << to_string(r.model) << "\n"
      << "n:          " << n << "\n"
      << "converged:  " << (r.converged ? "yes" : "no") << "\n";
  if (r.strategy) {
    out << "strategy:   " << fixed_list(r.strategy->probs(), 9) << "\n"
        << "payoff:     " << format_fixed(r.payoff, 9) << "\n";
  }
  out << "residual:   " << format_exact(r.residual_norm) << "\n"
      << "iterations: " << r.iterations << "\n"
      << "starts:     " << r.starts << "\n"
      << "interior:   " << (r.interior ? "yes" : "no (support assumption violated)") << "\n";
}

void solve_csv_row(const SolveResult& r, int n, std::ostream& out) {
  out << to_string(r.model) << ',' << n << ',' << (r.converged ? "true" : "false") << ','
      << (r.converged ? format_exact(r.payoff) : "") << ',' << format_exact(r.residual_norm) << ','
      << r.iterations << ',' << r.starts << ',' << (r.interior ? "true" : "false");
  for (int i = 0; i < n; ++i) {
    out << ',' << (r.strategy ? format_exact((*r.strategy)[i]) : "");
  }
  out << "\n";
}

int cmd_solve(const SolveArgs& args, Format format, std::ostream& out, std::ostream& err) {
  if (args.n < 3 || args.n > kMaxPlayers) {
    throw UsageError("--n must lie in [3, " + std::to_string(kMaxPlayers) + "]");
  }
  const auto model = parse_payoff_model(args.model);
  if (!model) throw UsageError("--model must be 'paper' or 'exact'");
  if (args.tol && !(*args.tol > 0.0)) throw UsageError("--tol must be positive");
  const GameSpec spec(args.n);
  SolverOptions options;
  options.tolerance = args.tol;
  if (args.max_iterations < 0) throw UsageError("--max-iter must be non-negative");
  options.max_iterations = args.max_iterations;

  std::vector<SolveResult> results;
  if (args.all_roots) {
    results = find_symmetric_roots(spec, *model, options);
  } else {
    results.push_back(solve_symmetric(spec, *model, options));
  }
  const bool converged = !results.empty() && results.front().converged;
  if (!converged && results.empty()) {
    SolveResult none;
    none.model = *model;
    results.push_back(none);
  }

  switch (format) {
    case Format::json: {
      json j = solve_json(results.front(), args.n);
      if (args.all_roots) {
        j["roots"] = json::array();
        for (const auto& r : results) j["roots"].push_back(solve_json(r, args.n));
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "model,n,converged,payoff,residual_norm,iterations,starts,interior"
          << csv_header("p", args.n) << "\n";
      for (const auto& r : results) solve_csv_row(r, args.n, out);
      break;
    case Format::text:
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (args.all_roots) out << (i > 0 ? "\n" : "") << "root " << i + 1 << "\n";
        solve_text(results[i], args.n, out);
      }
      break;
  }

  if (!converged) {
    err << "error: solver did not converge (best residual "
        << format_exact(results.front().residual_norm) << ")\n";
    return kNoConvergence;
  }
  if (!results.front().interior) {
    err << "warning: converged strategy sits on the simplex boundary; "
           "the full-support assumption does not hold\n";
  }
  if (!args.profile_out.empty()) {
    const auto profile = StrategyProfile::symmetric(spec, *results.front().strategy);
    write_profile_document(ProfileDocument::from_profile(profile), args.profile_out);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- table

int cmd_table(int max_n, Format format, std::ostream& out) {
  if (max_n < 3 || max_n > kMaxPlayers) {
    throw UsageError("--max-n must lie in [3, " + std::to_string(kMaxPlayers) + "]");
  }
  struct Row {
    std::string name;
    std::vector<std::optional<double>> values;
  };
  std::vector<Row> rows{{"approx", {}}, {"reference", {}}, {"exact", {}}};
  for (int n = 3; n <= max_n; ++n) {
    const GameSpec spec(n);
    rows[0].values.push_back(approx_payoff(spec));
    rows[1].values.push_back(reference_payoff(spec));
    if (n <= 4) {
      const SolveResult r = solve_paper_symmetric(spec);
      rows[2].values.push_back(r.converged ? std::optional(r.payoff) : std::nullopt);
    } else {
      rows[2].values.push_back(std::nullopt);
    }
  }
  auto cell = [](const std::optional<double>& v) {
    return v ? format_significant(*v, 3) : std::string();
  };

  switch (format) {
    case Format::json: {
      json j;
      j["n"] = json::array();
      for (int n = 3; n <= max_n; ++n) j["n"].push_back(n);
      for (const auto& row : rows) {
        json values = json::array(), rounded = json::array();
        for (const auto& v : row.values) {
          values.push_back(v ? json(*v) : json(nullptr));
          rounded.push_back(v ? json(cell(v)) : json(nullptr));
        }
        j["rows"][row.name] = {{"value", values}, {"rounded", rounded}};
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "source";
      for (int n = 3; n <= max_n; ++n) out << ',' << n;
      out << "\n";
      for (const auto& row : rows) {
        out << row.name;
        for (const auto& v : row.values) out << ',' << cell(v);
        out << "\n";
      }
      break;
    case Format::text: {
      auto pad = [](const std::string& s, std::size_t width) {
        return s + std::string(s.size() < width ? width - s.size() : 1, ' ');
      };
      std::string line = pad("n", 11);
      for (int n = 3; n <= max_n; ++n) line += pad(std::to_string(n), 9);
      out << line.substr(0, line.find_last_not_of(' ') + 1) << "\n";
      for (const auto& row : rows) {
        line = pad(row.name, 11);
        for (const auto& v : row.values) line += pad(cell(v), 9);
        out << line.substr(0, line.find_last_not_of(' ') + 1) << "\n";
      }
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& path, double eps, const std::string& model_name, Format format,
               std::ostream& out) {
  if (!(eps > 0.0)) throw UsageError("--eps must be positive");
  const auto model = parse_payoff_model(model_name);
  if (!model) throw UsageError("--model must be 'paper' or 'exact'");
  const ProfileDocument doc = read_profile_document(path);
  const StrategyProfile profile = doc.to_profile();
  const VerificationReport report = verify_profile(profile, eps, *model);
  const int n = profile.n();

  switch (format) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["model"] = std::string(to_string(report.model));
      j["epsilon"] = report.epsilon;
      j["is_nash"] = report.is_nash;
      j["payoff_sum"] = report.payoff_sum;
      j["is_payoff_sum_maximal"] = report.is_payoff_sum_maximal;
      j["players"] = json::array();
      for (int k = 0; k < n; ++k) {
        j["players"].push_back({{"label", doc.label(k)},
                                {"strategy", to_std(profile[k].probs())},
                                {"payoff", report.payoffs[k]},
                                {"best_response_value", report.best_response_values[k]},
                                {"deviation_gain", report.deviation_gains[k]},
                                {"best_choices", report.best_choices[k]},
                                {"indifferent_deviations", bool(report.indifferent_deviations[k])}});
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "player,label,payoff,best_response_value,deviation_gain,best_choices,"
             "indifferent_deviations\n";
      for (int k = 0; k < n; ++k) {
        out << k + 1 << ',' << doc.label(k) << ',' << format_exact(report.payoffs[k]) << ','
            << format_exact(report.best_response_values[k]) << ','
            << format_exact(report.deviation_gains[k]) << ','
            << choices_text(report.best_choices[k], ";") << ','
            << (report.indifferent_deviations[k] ? "true" : "false") << "\n";
      }
      break;
    case Format::text: {
      out << "model: " << to_string(report.model) << ", epsilon: " << format_exact(eps) << "\n";
      for (int k = 0; k < n; ++k) {
        out << doc.label(k) << ": payoff " << format_fixed(report.payoffs[k], 9)
            << ", best response " << format_fixed(report.best_response_values[k], 9)
            << " (choices " << choices_text(report.best_choices[k], ",") << "), gain "
            << format_fixed(report.deviation_gains[k], 9);
        if (report.indifferent_deviations[k]) out << ", indifferent deviations exist";
        out << "\n";
      }
      out << "payoff sum: " << format_fixed(report.payoff_sum, 9)
          << (report.is_payoff_sum_maximal ? " (maximal: Pareto optimal)" : " (not maximal)")
          << "\n";
      if (report.is_nash) {
        const bool weak = std::any_of(report.indifferent_deviations.begin(),
                                      report.indifferent_deviations.end(), [](bool b) { return b; });
        out << "verdict: Nash equilibrium" << (weak ? " (weak)" : "") << "\n";
      } else {
        Eigen::Index worst = 0;
        report.deviation_gains.maxCoeff(&worst);
        out << "verdict: not a Nash equilibrium; " << doc.label(static_cast<int>(worst))
            << " gains " << format_fixed(report.deviation_gains[worst], 9)
            << " by switching to choice " << report.best_choices[worst].front() << "\n";
      }
      break;
    }
  }
  return report.is_nash ? kSuccess : kNotVerified;
}

// ---------------------------------------------------------------- payoff

int cmd_payoff(const std::string& path, Format format, std::ostream& out) {
  const ProfileDocument doc = read_profile_document(path);
  const StrategyProfile profile = doc.to_profile();
  const PayoffVector payoffs = exact_profile_payoffs(profile);
  const int n = profile.n();
  switch (format) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["payoffs"] = to_std(payoffs);
      j["labels"] = json::array();
      for (int k = 0; k < n; ++k) j["labels"].push_back(doc.label(k));
      j["payoff_sum"] = payoffs.sum();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "player,label,payoff\n";
      for (int k = 0; k < n; ++k) {
        out << k + 1 << ',' << doc.label(k) << ',' << format_exact(payoffs[k]) << "\n";
      }
      break;
    case Format::text:
      for (int k = 0; k < n; ++k) {
        out << doc.label(k) << ": " << format_fixed(payoffs[k], 9) << "\n";
      }
      out << "payoff sum: " << format_fixed(payoffs.sum(), 9) << "\n";
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- best-response

int cmd_best_response(int n, const std::vector<std::string>& others_text, Format format,
                      std::ostream& out) {
  if (n < 2 || n > kMaxPlayers) {
    throw UsageError("--n must lie in [2, " + std::to_string(kMaxPlayers) + "]");
  }
  if (static_cast<int>(others_text.size()) != n - 1) {
    throw UsageError("--others needs " + std::to_string(n - 1) + " strategies, got " +
                     std::to_string(others_text.size()));
  }
  std::vector<MixedStrategy> others;
  for (const auto& text : others_text) others.push_back(parse_strategy_list(text, n));
  const BestResponse br = best_response(GameSpec(n), others);

  switch (format) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["values"] = to_std(br.values);
      j["best_choices"] = br.best_choices;
      j["best_value"] = br.best_value();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "choice,value,best\n";
      for (int i = 0; i < n; ++i) {
        const bool best = std::find(br.best_choices.begin(), br.best_choices.end(), i + 1) !=
                          br.best_choices.end();
        out << i + 1 << ',' << format_exact(br.values[i]) << ',' << (best ? "true" : "false")
            << "\n";
      }
      break;
    case Format::text:
      for (int i = 0; i < n; ++i) {
        out << "choice " << i + 1 << ": " << format_fixed(br.values[i], 9) << "\n";
      }
      out << "best choices: " << choices_text(br.best_choices, ",") << "\n";
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- approx

int cmd_approx(int n, const std::string& profile_out, Format format, std::ostream& out) {
  if (n < 3 || n > kMaxApproxPlayers) {
    throw UsageError("--n must lie in [3, " + std::to_string(kMaxApproxPlayers) + "]");
  }
  const GameSpec spec(n);
  const MixedStrategy strategy = geometric_strategy(spec);
  const double payoff = approx_payoff(spec);
  const double baseline = reference_payoff(spec);
  switch (format) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["strategy"] = to_std(strategy.probs());
      j["payoff"] = payoff;
      j["reference_payoff"] = baseline;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "n,payoff,reference_payoff" << csv_header("p", n) << "\n"
          << n << ',' << format_exact(payoff) << ',' << format_exact(baseline) << ','
          << join(strategy.probs(), ",") << "\n";
      break;
    case Format::text:
      out << "strategy:  " << join(strategy.probs(), " ") << "\n"
          << "payoff:    " << format_exact(payoff) << "\n"
          << "reference: " << format_exact(baseline) << "\n";
      break;
  }
  if (!profile_out.empty()) {
    write_profile_document(
        ProfileDocument::from_profile(StrategyProfile::symmetric(spec, strategy)), profile_out);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const std::string& path, std::int64_t rounds, std::uint64_t seed,
                 unsigned threads, Format format, std::ostream& out) {
  if (rounds < 1) throw UsageError("--rounds must be at least 1");
  const ProfileDocument doc = read_profile_document(path);
  const StrategyProfile profile = doc.to_profile();
  const SimulationStats stats = simulate(profile, rounds, seed, threads);
  const int n = profile.n();
  std::optional<PayoffVector> exact;
  if (n <= kMaxPlayers) exact = exact_profile_payoffs(profile);

  auto z_score = [&](int k) {
    const double se = stats.standard_errors[k];
    const double diff = stats.empirical_payoffs[k] - (*exact)[k];
    return se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  };

  switch (format) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["rounds"] = stats.rounds;
      j["seed"] = stats.seed;
      j["wins"] = stats.wins;
      j["no_winner_rounds"] = stats.no_winner_rounds;
      j["empirical_payoffs"] = to_std(stats.empirical_payoffs);
      j["standard_errors"] = to_std(stats.standard_errors);
      if (exact) j["exact_payoffs"] = to_std(*exact);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "player,label,wins,empirical_payoff,standard_error,exact_payoff\n";
      for (int k = 0; k < n; ++k) {
        out << k + 1 << ',' << doc.label(k) << ',' << stats.wins[k] << ','
            << format_exact(stats.empirical_payoffs[k]) << ','
            << format_exact(stats.standard_errors[k]) << ','
            << (exact ? format_exact((*exact)[k]) : "") << "\n";
      }
      break;
    case Format::text:
      out << "rounds: " << stats.rounds << ", seed: " << stats.seed
          << ", no winner: " << stats.no_winner_rounds << "\n";
      for (int k = 0; k < n; ++k) {
        out << doc.label(k) << ": wins " << stats.wins[k] << ", payoff "
            << format_fixed(stats.empirical_payoffs[k], 6) << " +/- "
            << format_fixed(stats.standard_errors[k], 6);
        if (exact) {
          out << " (exact " << format_fixed((*exact)[k], 6) << ", z "
              << format_fixed(z_score(k), 2) << ")";
        }
        out << "\n";
      }
      break;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lowest unique positive integer game analysis", "lupi"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  Format format = Format::text;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Find a symmetric equilibrium by Newton iteration");
  solve->add_option("--n", solve_args.n, "Number of players")->required();
  solve->add_option("--model", solve_args.model, "Payoff model: paper or exact");
  solve->add_option("--tol", solve_args.tol, "Residual tolerance (default 1e-12 paper, 1e-10 exact)");
  solve->add_option("--max-iter", solve_args.max_iterations, "Newton steps per start");
  solve->add_flag("--all-roots", solve_args.all_roots, "Report every distinct root over all starts");
  solve->add_option("--profile-out", solve_args.profile_out, "Write the symmetric profile here");
  add_format(solve);

  int max_n = 8;
  auto* table = app.add_subcommand("table", "Compare approximate, reference and exact payoffs");
  table->add_option("--max-n", max_n, "Largest player count");
  add_format(table);

  std::string profile_path;
  double eps = kDefaultEpsilon;
  std::string verify_model = "exact";
  auto* verify = app.add_subcommand("verify", "Check a profile for unilateral deviations");
  verify->add_option("--profile", profile_path, "Profile document (JSON)")->required();
  verify->add_option("--eps", eps, "Tolerance on deviation gains");
  verify->add_option("--model", verify_model, "Payoff model: exact or paper (symmetric only)");
  add_format(verify);

  auto* payoff = app.add_subcommand("payoff", "Exact expected payoffs of a profile");
  payoff->add_option("--profile", profile_path, "Profile document (JSON)")->required();
  add_format(payoff);

  int br_n = 0;
  std::vector<std::string> others;
  auto* br = app.add_subcommand("best-response", "Pure-choice payoffs against fixed opponents");
  br->add_option("--n", br_n, "Number of players")->required();
  br->add_option("--others", others, "Opponent strategies as comma-separated probabilities")
      ->required()
      ->expected(1, -1);
  add_format(br);

  int approx_n = 0;
  std::string approx_out;
  auto* approx = app.add_subcommand("approx", "Geometric approximate strategy and its payoff");
  approx->add_option("--n", approx_n, "Number of players")->required();
  approx->add_option("--profile-out", approx_out, "Write the symmetric profile here");
  add_format(approx);

  std::int64_t rounds = 1000000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of a profile's payoffs");
  sim->add_option("--profile", profile_path, "Profile document (JSON)")->required();
  sim->add_option("--rounds", rounds, "Number of rounds");
  sim->add_option("--seed", seed, "Master seed");
  sim->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_format(sim);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args, format, out, err);
    if (table->parsed()) return cmd_table(max_n, format, out);
    if (verify->parsed()) return cmd_verify(profile_path, eps, verify_model, format, out);
    if (payoff->parsed()) return cmd_payoff(profile_path, format, out);
    if (br->parsed()) return cmd_best_response(br_n, others, format, out);
    if (approx->parsed()) return cmd_approx(approx_n, approx_out, format, out);
    if (sim->parsed()) return cmd_simulate(profile_path, rounds, seed, threads, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  } catch (const ProfileError& e) {
    err << "profile error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace lupi::cli
