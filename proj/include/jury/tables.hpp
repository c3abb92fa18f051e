#pragma once

// CSV tables for the command-line tool, including the data series behind
// each figure:
//   1  P(n,p) on p in [1/2, 1] for n = 1, 3, 5, 7, 91
//   2  fixed budget, c_1 = 1 against n = 3 with c_3 = 1 and c_3 = 2
//   3  fixed budget, c_1 = 1 against n = 3 with c_3 = 2.25 and c_3 = 3
//   4  cost of reaching P* = 0.8 for odd n <= 41 at rates 1, c*_n and 2 c*_n
//   5  linear single voter against three voters with power profiles
//      alpha = 0.55 (concave) and alpha = 2 (convex)
//   6  plateau profile a = 1, cap = 2/3 for one and three voters
//   7  the drift3 mean-drift scenario
//   8  the three window4 scenarios side by side

#include <string>
#include <vector>

#include "jury/csv.hpp"
#include "jury/dynamics.hpp"
#include "jury/learning_profiles.hpp"
#include "jury/scenarios.hpp"
#include "jury/tradeoff.hpp"
#include "jury/vote_math.hpp"

namespace jury {

inline constexpr int kFigureCount = 8;
inline constexpr std::size_t kFigureTrajectoryStride = 10;

inline CsvTable rates_table(RateMode mode, int n_max) {
  detail::require(n_max >= 1, "n-max must be at least 1");
  CsvTable table{{"n", "exact", "value", "asymptote"}, {}};
  for (int n : odd_range(1, n_max)) {
    const Rational exact = mode == RateMode::Critical ? critical_group_rate(n) : expert_threshold(n);
    const auto check = asymptotic_rate_check(n, mode);
    table.add_row({double(n), exact.str(), check.exact, check.asymptote});
  }
  return table;
}

inline CsvTable tradeoff_table(double c_single, double c_group, int n, double t_max, int points) {
  detail::require(t_max >= 0.0, "t-max must be non-negative");
  CsvTable table{{"T", "P_single", "P_group"}, {}};
  for (const auto& row : fixed_budget_compare(c_single, c_group, n, uniform_grid(0.0, t_max, points)))
    table.add_row({row.time, row.single, row.group});
  return table;
}

inline CsvTable cost_table(double target, const LearningProfile& profile, const std::vector<int>& n_list) {
  CsvTable table{{"n", "p_star", "t_star", "cost"}, {}};
  for (int n : n_list) {
    const auto r = cost_to_reach({n, target, profile});
    table.add_row({double(n), r.p_star, r.t_star, r.cost});
  }
  return table;
}

inline CsvTable trajectory_table(const Trajectory& traj, std::size_t stride = 1) {
  detail::require(stride >= 1, "stride must be positive");
  CsvTable table;
  table.header.push_back("t");
  for (int i = 1; i <= traj.config.n; ++i) table.header.push_back("p" + std::to_string(i));
  table.header.push_back("P_group");
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    if (k % stride != 0 && k + 1 != traj.times.size()) continue;
    std::vector<CsvCell> row{traj.times[k]};
    for (double p : traj.states[k]) row.emplace_back(p);
    row.emplace_back(traj.group_curve[k]);
    table.add_row(std::move(row));
  }
  return table;
}

namespace detail {

inline CsvTable majority_curves_figure() {
  const std::vector<int> sizes{1, 3, 5, 7, 91};
  CsvTable table{{"p"}, {}};
  for (int n : sizes) table.header.push_back("P_" + std::to_string(n));
  for (double p : uniform_grid(0.5, 1.0)) {
    std::vector<CsvCell> row{p};
    for (int n : sizes) row.emplace_back(majority_prob_homogeneous(n, p));
    table.add_row(std::move(row));
  }
  return table;
}

inline CsvTable budget_figure(double rate_a, double rate_b, const std::string& label_a,
                              const std::string& label_b, double t_max) {
  CsvTable table{{"T", "P_1", "P_3_c" + label_a, "P_3_c" + label_b}, {}};
  const auto grid = uniform_grid(0.0, t_max);
  const auto a = fixed_budget_compare(1.0, rate_a, 3, grid);
  const auto b = fixed_budget_compare(1.0, rate_b, 3, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) table.add_row({grid[i], a[i].single, a[i].group, b[i].group});
  return table;
}

inline CsvTable cost_figure() {
  CsvTable table{{"n", "rate_one", "cost_one", "rate_critical", "cost_critical", "rate_double",
                  "cost_double"},
                 {}};
  const auto sizes = odd_range(1, 41);
  const auto one = cost_curve(0.8, sizes, [](int) { return 1.0; });
  const auto crit = cost_curve(0.8, sizes, [](int n) { return critical_group_rate(n).to_double(); });
  const auto dbl = cost_curve(0.8, sizes, [](int n) { return 2.0 * critical_group_rate(n).to_double(); });
  for (std::size_t i = 0; i < sizes.size(); ++i)
    table.add_row({double(sizes[i]), one[i].rate, one[i].cost, crit[i].rate, crit[i].cost, dbl[i].rate,
                   dbl[i].cost});
  return table;
}

inline CsvTable power_profile_figure() {
  CsvTable table{{"T", "p_1", "P_1", "p_3_concave", "P_3_concave", "p_3_convex", "P_3_convex"}, {}};
  const auto single = LearningProfile::linear(1.0);
  const auto concave = LearningProfile::power(0.55);
  const auto convex = LearningProfile::power(2.0);
  for (double t : uniform_grid(0.0, 1.5)) {
    const double pc = concave.evaluate(t / 3);
    const double pv = convex.evaluate(t / 3);
    table.add_row({t, single.evaluate(t), single.evaluate(t), pc, majority_prob_homogeneous(3, pc), pv,
                   majority_prob_homogeneous(3, pv)});
  }
  return table;
}

inline CsvTable plateau_figure() {
  CsvTable table{{"T", "p_1", "P_1", "p_3", "P_3"}, {}};
  const auto profile = LearningProfile::plateau(1.0, 2.0 / 3.0);
  for (double t : uniform_grid(0.0, 1.0)) {
    const double p3 = profile.evaluate(t / 3);
    table.add_row({t, profile.evaluate(t), profile.evaluate(t), p3, majority_prob_homogeneous(3, p3)});
  }
  return table;
}

inline CsvTable window_figure() {
  const std::vector<std::string> names{"consensus", "lowstart", "fastleader"};
  std::vector<Trajectory> runs;
  CsvTable table{{"t"}, {}};
  for (const auto& name : names) {
    runs.push_back(integrate(scenario_preset("window4-" + name)));
    for (int i = 1; i <= runs.back().config.n; ++i) table.header.push_back(name + "_p" + std::to_string(i));
    table.header.push_back(name + "_P_group");
  }
  const auto samples = runs.front().times.size();
  for (const auto& r : runs) require(r.times.size() == samples, "window scenarios must share a time grid");
  for (std::size_t k = 0; k < samples; ++k) {
    if (k % kFigureTrajectoryStride != 0 && k + 1 != samples) continue;
    std::vector<CsvCell> row{runs.front().times[k]};
    for (const auto& r : runs) {
      for (double p : r.states[k]) row.emplace_back(p);
      row.emplace_back(r.group_curve[k]);
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace detail

inline CsvTable figure_table(int id) {
  switch (id) {
    case 1: return detail::majority_curves_figure();
    case 2: return detail::budget_figure(1.0, 2.0, "1", "2", 1.5);
    case 3: return detail::budget_figure(2.25, 3.0, "2.25", "3", 1.0);
    case 4: return detail::cost_figure();
    case 5: return detail::power_profile_figure();
    case 6: return detail::plateau_figure();
    case 7: return trajectory_table(integrate(scenario_preset("drift3")), kFigureTrajectoryStride);
    case 8: return detail::window_figure();
    default: throw domain_error("figure id must be between 1 and " + std::to_string(kFigureCount));
  }
}

}  // namespace jury
