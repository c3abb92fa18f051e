#pragma once

// Single voter versus group under linear learning: critical group learning
// rates, expert thresholds, fixed-budget comparisons and the cost of reaching
// a target group competence.
//
// Everything hinges on D_n = dP(n,p)/dp at p = 1/2. A group of n splitting a
// budget T has initial slope (c_n / n) D_n, a single voter has slope c_1, so
// the group can only lead at small T if c_n > n / D_n.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "jury/bisection.hpp"
#include "jury/errors.hpp"
#include "jury/learning_profiles.hpp"
#include "jury/rational.hpp"
#include "jury/vote_math.hpp"

namespace jury {

/// c*_n = n / D_n = 2^(n-1) / C(n-1,(n-1)/2): the group learning rate above
/// which n voters sharing a time budget beat a unit-rate single voter at
/// small budgets.
inline Rational critical_group_rate(int n) {
  return Rational(n) / derivative_at_half(n);
}

/// c_1(n) = D_n: the expert learning rate above which one expert beats n
/// unit-rate voters under a common deadline at small times.
inline Rational expert_threshold(int n) { return derivative_at_half(n); }

enum class RateMode { Critical, Expert };

struct AsymptoticCheck {
  double exact;
  double asymptote;
  double relative_gap;  // exact / asymptote - 1
};

/// Compares the exact rate with its large-n form: sqrt(n pi / 2) for the
/// critical rate, sqrt(2n / pi) for the expert threshold.
inline AsymptoticCheck asymptotic_rate_check(int n, RateMode mode) {
  const double nn = n;
  if (mode == RateMode::Critical) {
    const double exact = critical_group_rate(n).to_double();
    const double asymptote = std::sqrt(nn * std::numbers::pi / 2.0);
    return {exact, asymptote, exact / asymptote - 1.0};
  }
  const double exact = expert_threshold(n).to_double();
  const double asymptote = std::sqrt(2.0 * nn / std::numbers::pi);
  return {exact, asymptote, exact / asymptote - 1.0};
}

struct BudgetPoint {
  double time;
  double single;  // one voter using the whole budget
  double group;   // n voters using budget / n each
};

inline std::vector<BudgetPoint> fixed_budget_compare(double c_single, double c_group, int n,
                                                     const std::vector<double>& grid) {
  detail::require(n >= 3 && n % 2 == 1, "group size must be odd and at least 3");
  require_sorted_grid(grid);
  const auto single = LearningProfile::linear(c_single);
  const auto group = LearningProfile::linear(c_group);
  std::vector<BudgetPoint> out;
  out.reserve(grid.size());
  for (double t : grid)
    out.push_back({t, single.evaluate(t),
                   group_competence(group, {t, n, AllocationRule::EqualSplit})});
  return out;
}

/// d/dT of the group competence of n linear learners at T = 0.
inline double initial_slope(int n, double c, AllocationRule rule) {
  const double d = derivative_at_half(n).to_double();
  return rule == AllocationRule::EqualSplit ? c / n * d : c * d;
}

struct CostQuery {
  int n;
  double target;  // P*, strictly between 1/2 and 1
  LearningProfile profile;
};

struct CostResult {
  double p_star;  // individual competence giving P(n, p_star) = target
  double t_star;  // time per voter to reach p_star
  double cost;    // n * t_star
};

/// Individual competence p with P(n,p) = target, by bisection on [1/2, upper].
inline double competence_for_target(int n, double target, double upper = 1.0) {
  const auto gap = [&](double p) { return majority_prob_homogeneous(n, p) - target; };
  if (gap(upper) < 0.0)
    throw unattainable_target("group of " + std::to_string(n) + " cannot reach competence " +
                              std::to_string(target));
  return bisect_increasing(gap, 0.5, upper, 1e-12);
}

inline CostResult cost_to_reach(const CostQuery& q) {
  detail::require(q.n >= 1 && q.n % 2 == 1, "cost query needs an odd positive group size");
  detail::require(q.target > 0.5 && q.target < 1.0, "target group competence must lie in (1/2, 1)");
  const double p_star = competence_for_target(q.n, q.target, q.profile.supremum());
  const double t_star = q.profile.time_to_reach(p_star);
  return {p_star, t_star, q.n * t_star};
}

struct CostPoint {
  int n;
  double rate;
  double cost;
};

/// Cost of reaching target with linear learners whose rate depends on n.
inline std::vector<CostPoint> cost_curve(double target, const std::vector<int>& n_list,
                                         const std::function<double(int)>& rate_for) {
  std::vector<CostPoint> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    const double c = rate_for(n);
    out.push_back({n, c, cost_to_reach({n, target, LearningProfile::linear(c)}).cost});
  }
  return out;
}

inline std::vector<int> odd_range(int first, int last) {
  std::vector<int> out;
  for (int n = first | 1; n <= last; n += 2) out.push_back(n);
  return out;
}

}  // namespace jury
