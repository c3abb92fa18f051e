#pragma once

// Command-line front end. run() is the whole tool; main() only forwards argv.
//
// Every subcommand renders its complete output into a string before anything
// is written, so a failing command never leaves partial CSV behind.
// Exit codes: 0 success, 1 library (domain) error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jury/correlation.hpp"
#include "jury/csv.hpp"
#include "jury/dynamics.hpp"
#include "jury/learning_profiles.hpp"
#include "jury/scenarios.hpp"
#include "jury/tables.hpp"
#include "jury/text.hpp"
#include "jury/tradeoff.hpp"
#include "jury/vote_math.hpp"

namespace jury::cli {

/// Plain-text covariance file: n on the first line, then n rows of n numbers.
inline std::vector<double> read_covariance_file(const std::string& path, int expected_n) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open covariance file '" + path + "'");
  in.imbue(std::locale::classic());
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw domain_error("covariance file '" + path + "' is empty");
  const double n = detail::parse_double(tokens[0], "covariance size");
  if (n != expected_n)
    throw domain_error("covariance file is for " + tokens[0] + " voters, competences give " +
                       std::to_string(expected_n));
  const auto cells = static_cast<std::size_t>(expected_n) * static_cast<std::size_t>(expected_n);
  if (tokens.size() != cells + 1)
    throw domain_error("covariance file '" + path + "' must hold " + std::to_string(cells) + " entries");
  std::vector<double> cov;
  cov.reserve(cells);
  for (std::size_t i = 1; i < tokens.size(); ++i) cov.push_back(detail::parse_double(tokens[i], "covariance"));
  return cov;
}

inline std::string scalar_line(double value) { return detail::format_double(value) + "\n"; }

inline std::string outcome_csv(const Outcome& outcome, int n) {
  CsvTable table{{"outcome", "members", "value"}, {}};
  if (outcome.kind == Outcome::Kind::ConsensusAtOne) {
    std::string members;
    for (int i = 1; i <= n; ++i) members += (i > 1 ? " " : "") + std::to_string(i);
    table.add_row({std::string("consensus"), members, 1.0});
  } else {
    for (const auto& c : outcome.clusters) {
      std::string members;
      for (std::size_t i = 0; i < c.members.size(); ++i)
        members += (i ? " " : "") + std::to_string(c.members[i]);
      table.add_row({std::string("fragmented"), members, c.value});
    }
  }
  return to_csv(table);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majority-vote competence, learning-rate trade-offs and competence dynamics", "jury_cli"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write output to FILE instead of standard output");

  std::string result;

  // majority
  auto* majority = app.add_subcommand("majority", "Probability of a correct simple-majority vote");
  int maj_n = 0;
  double maj_p = 0.0;
  std::string maj_probs;
  bool fair_coin = false;
  auto* opt_n = majority->add_option("--n", maj_n, "Group size");
  auto* opt_p = majority->add_option("--p", maj_p, "Common competence");
  auto* opt_probs = majority->add_option("--probs", maj_probs, "Comma-separated competences");
  majority->add_flag("--fair-coin", fair_coin, "Break ties in even groups with a fair coin");
  opt_n->needs(opt_p);
  opt_p->needs(opt_n);
  opt_probs->excludes(opt_n)->excludes(opt_p);
  majority->callback([&] {
    const MajorityRule rule = fair_coin ? MajorityRule::fair_coin() : MajorityRule::odd_only();
    if (!maj_probs.empty()) {
      result = scalar_line(majority_prob_heterogeneous(CompetenceVector(parse_double_list(maj_probs, "competence")), rule));
    } else {
      if (!*opt_n) throw CLI::RequiredError("majority needs --n and --p, or --probs");
      result = scalar_line(majority_prob_homogeneous(maj_n, maj_p, rule));
    }
  });

  // extremal
  auto* extremal = app.add_subcommand("extremal", "Most competent composition with a given mean");
  int ext_n = 0;
  double ext_pbar = 0.0;
  extremal->add_option("--n", ext_n, "Group size")->required();
  extremal->add_option("--pbar", ext_pbar, "Mean competence")->required();
  extremal->callback([&] {
    const auto v = hoeffding_extremal(ext_n, ext_pbar);
    CsvTable table;
    std::vector<CsvCell> row;
    for (int i = 0; i < v.size(); ++i) {
      table.header.push_back("p" + std::to_string(i + 1));
      row.emplace_back(v[static_cast<std::size_t>(i)]);
    }
    table.add_row(std::move(row));
    result = to_csv(table);
  });

  // majorize
  auto* majorize = app.add_subcommand("majorize", "Whether composition a majorizes composition b");
  std::string maj_a;
  std::string maj_b;
  majorize->add_option("--a", maj_a, "Comma-separated competences")->required();
  majorize->add_option("--b", maj_b, "Comma-separated competences")->required();
  majorize->callback([&] {
    result = majorizes(CompetenceVector(parse_double_list(maj_a, "competence")),
                       CompetenceVector(parse_double_list(maj_b, "competence")))
                 ? "true\n"
                 : "false\n";
  });

  // bound
  auto* bound = app.add_subcommand("bound", "Lower and upper bounds on majority correctness");
  bound->require_subcommand(1);
  auto* ladha = bound->add_subcommand("ladha", "Lower bound from means and pairwise covariances");
  std::string ladha_probs;
  std::string ladha_cov;
  ladha->add_option("--probs", ladha_probs, "Comma-separated competences")->required();
  ladha->add_option("--cov", ladha_cov, "Covariance file (n, then n rows of n numbers)");
  ladha->callback([&] {
    const CompetenceVector p(parse_double_list(ladha_probs, "competence"));
    const auto spec = ladha_cov.empty() ? CovarianceSpec::independent(p)
                                        : CovarianceSpec(p, read_covariance_file(ladha_cov, p.size()));
    result = scalar_line(ladha_bound(spec));
  });
  auto* conc = bound->add_subcommand("concentration", "Upper bound on an incorrect majority");
  int conc_n = 0;
  double conc_pbar = 0.0;
  conc->add_option("--n", conc_n, "Group size")->required();
  conc->add_option("--pbar", conc_pbar, "Mean competence")->required();
  conc->callback([&] { result = scalar_line(concentration_failure_bound(conc_n, conc_pbar)); });

  // rates
  auto* rates = app.add_subcommand("rates", "Exact critical group rates and expert thresholds");
  rates->require_subcommand(1);
  int rates_n_max = 15;
  for (auto [name, mode] : {std::pair{"critical", RateMode::Critical}, std::pair{"expert", RateMode::Expert}}) {
    auto* sub = rates->add_subcommand(name, mode == RateMode::Critical
                                                ? "Group rate needed to beat a unit-rate single voter"
                                                : "Expert rate needed to beat n unit-rate voters");
    sub->add_option("--n-max", rates_n_max, "Largest odd group size")->required();
    sub->callback([&, mode = mode] { result = to_csv(rates_table(mode, rates_n_max)); });
  }

  // tradeoff
  auto* tradeoff = app.add_subcommand("tradeoff", "Single voter against a group sharing a time budget");
  double c1 = 1.0;
  double cg = 1.0;
  int to_n = 3;
  double t_max = 1.0;
  int points = 512;
  tradeoff->add_option("--c1", c1, "Single voter's learning rate")->required();
  tradeoff->add_option("--cg", cg, "Group members' learning rate")->required();
  tradeoff->add_option("--n", to_n, "Odd group size")->required();
  tradeoff->add_option("--t-max", t_max, "Largest total time")->required();
  tradeoff->add_option("--points", points, "Number of grid points")->default_val(512);
  tradeoff->callback([&] { result = to_csv(tradeoff_table(c1, cg, to_n, t_max, points)); });

  // cost
  auto* cost = app.add_subcommand("cost", "Total time needed to reach a target group competence");
  double pstar = 0.8;
  std::string profile_spec;
  std::string n_list;
  cost->add_option("--pstar", pstar, "Target group competence")->required();
  cost->add_option("--profile", profile_spec, "linear:c=X | power:alpha=X | plateau:a=X,cap=Y")->required();
  cost->add_option("--n-list", n_list, "Comma-separated odd group sizes")->required();
  cost->callback([&] {
    std::vector<int> sizes;
    for (double v : parse_double_list(n_list, "group size")) {
      detail::require(v >= 1 && v == static_cast<int>(v), "group sizes must be positive integers");
      sizes.push_back(static_cast<int>(v));
    }
    result = to_csv(cost_table(pstar, LearningProfile::parse(profile_spec), sizes));
  });

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Integrate the mean-drift competence dynamics");
  std::string scenario;
  std::string config_path;
  std::size_t stride = 1;
  std::optional<double> outcome_tol;
  auto* opt_scenario = simulate->add_option("--scenario", scenario, "drift3 | window4-consensus | window4-lowstart | window4-fastleader");
  auto* opt_config = simulate->add_option("--config", config_path, "Dynamics config file");
  opt_scenario->excludes(opt_config);
  simulate->add_option("--stride", stride, "Emit every k-th sample")->default_val(1);
  simulate->add_option("--outcome", outcome_tol, "Print the long-run outcome at this tolerance instead");
  simulate->callback([&] {
    DynamicsConfig config;
    if (*opt_scenario) {
      config = scenario_preset(scenario);
    } else if (*opt_config) {
      std::ifstream in(config_path);
      if (!in) throw domain_error("cannot open config file '" + config_path + "'");
      config = parse_dynamics_config(in);
    } else {
      throw CLI::RequiredError("simulate needs --scenario or --config");
    }
    const auto traj = integrate(config);
    result = outcome_tol ? outcome_csv(classify_outcome(traj, *outcome_tol), config.n)
                         : to_csv(trajectory_table(traj, stride));
  });

  // correlate
  auto* correlate = app.add_subcommand("correlate", "Monte Carlo majority rate under a correlated vote model");
  std::string model_spec;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  correlate->add_option("--model", model_spec, "independent:P1,P2,... | common:n=N,p=P,mix=L | exact-majority:n=N")->required();
  correlate->add_option("--trials", trials, "Number of simulated votes")->required();
  correlate->add_option("--seed", seed, "Random seed")->required();
  correlate->callback([&] {
    const auto model = parse_vote_model(model_spec);
    const auto mc = sample_majority_rate(model, trials, seed);
    CsvTable table{{"estimate", "standard_error", "exact", "trials", "seed"}, {}};
    table.add_row({mc.estimate, mc.standard_error, model_majority_prob(model), double(trials), double(seed)});
    result = to_csv(table);
  });

  // figure
  auto* figure = app.add_subcommand("figure", "Data series behind one of the figures");
  int figure_id = 1;
  figure->add_option("--id", figure_id, "Figure number")->required()->check(CLI::Range(1, kFigureCount));
  figure->callback([&] { result = to_csv(figure_table(figure_id)); });

  std::vector<const char*> argv{"jury_cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const jury::error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    out << result;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << result)) {
      err << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace jury::cli
