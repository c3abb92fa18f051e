#pragma once

// Learning profiles: individual competence as a function of the time a voter
// spends on the question. Every profile starts at 1/2 (a coin flip) and is
// non-decreasing and bounded by 1.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jury/errors.hpp"
#include "jury/text.hpp"
#include "jury/vote_math.hpp"

namespace jury {

/// p(t) = min(1/2 + rate t, 1), saturating at t = 1/(2 rate).
struct Linear {
  double rate;
};

/// p(t) = min(1/2 + t^exponent, 1). Concave for exponent < 1, convex above.
struct Power {
  double exponent;
};

/// p(t) = min(1/2 + rate t, cap).
struct Plateau {
  double rate;
  double cap;
};

class LearningProfile {
 public:
  using Kind = std::variant<Linear, Power, Plateau>;

  LearningProfile(Linear k) : kind_(k) {
    detail::require(k.rate > 0.0 && std::isfinite(k.rate), "linear rate must be positive");
  }
  LearningProfile(Power k) : kind_(k) {
    detail::require(k.exponent > 0.0 && std::isfinite(k.exponent),
                    "power exponent must be positive");
  }
  LearningProfile(Plateau k) : kind_(k) {
    detail::require(k.rate > 0.0 && std::isfinite(k.rate), "plateau rate must be positive");
    detail::require(k.cap >= 0.5 && k.cap <= 1.0, "plateau cap must lie in [1/2, 1]");
  }

  static LearningProfile linear(double c) { return Linear{c}; }
  static LearningProfile power(double alpha) { return Power{alpha}; }
  static LearningProfile plateau(double a, double cap) { return Plateau{a, cap}; }

  const Kind& kind() const { return kind_; }

  double evaluate(double t) const {
    detail::require(t >= 0.0, "time must be non-negative");
    return std::visit(
        [t](const auto& k) -> double {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Linear>)
            return std::min(0.5 + k.rate * t, 1.0);
          else if constexpr (std::is_same_v<K, Power>)
            return std::min(0.5 + std::pow(t, k.exponent), 1.0);
          else
            return std::min(0.5 + k.rate * t, k.cap);
        },
        kind_);
  }

  /// Largest competence the profile ever reaches.
  double supremum() const {
    if (const auto* k = std::get_if<Plateau>(&kind_)) return k->cap;
    return 1.0;
  }

  /// Smallest t with evaluate(t) = p, for p in [1/2, supremum()].
  double time_to_reach(double p) const {
    detail::require(p >= 0.5, "competence target below 1/2");
    if (p > supremum()) throw unattainable_target("profile never reaches competence " + std::to_string(p));
    return std::visit(
        [p](const auto& k) -> double {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Power>)
            return std::pow(p - 0.5, 1.0 / k.exponent);
          else
            return (p - 0.5) / k.rate;
        },
        kind_);
  }

  /// Config syntax: linear:c=<x>, power:alpha=<x>, plateau:a=<x>,cap=<x>.
  std::string to_string() const;
  static LearningProfile parse(std::string_view spec);

 private:
  Kind kind_;
};

enum class AllocationRule {
  EqualSplit,  // each of the n voters gets T/n
  FullTime,    // each voter gets the whole T
};

struct TimeAllocation {
  double total_time = 0.0;
  int group_size = 1;
  AllocationRule rule = AllocationRule::EqualSplit;

  double per_voter_time() const {
    detail::require(total_time >= 0.0, "total time must be non-negative");
    detail::require(group_size >= 1, "group size must be positive");
    return rule == AllocationRule::EqualSplit ? total_time / group_size : total_time;
  }
};

inline double group_competence(const LearningProfile& profile, const TimeAllocation& alloc,
                               MajorityRule rule = MajorityRule::odd_only()) {
  return majority_prob_homogeneous(alloc.group_size, profile.evaluate(alloc.per_voter_time()),
                                   rule);
}

struct CurvePoint {
  double time;
  double probability;
};

inline void require_sorted_grid(const std::vector<double>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    detail::require(grid[i] >= 0.0, "time grid must be non-negative");
    if (i > 0) detail::require(grid[i - 1] <= grid[i], "time grid must be sorted ascending");
  }
}

inline std::vector<CurvePoint> competence_curve(const LearningProfile& profile, int n,
                                                AllocationRule alloc_rule,
                                                const std::vector<double>& grid,
                                                MajorityRule rule = MajorityRule::odd_only()) {
  require_sorted_grid(grid);
  std::vector<CurvePoint> curve;
  curve.reserve(grid.size());
  for (double t : grid)
    curve.push_back({t, group_competence(profile, {t, n, alloc_rule}, rule)});
  return curve;
}

/// points equally spaced values from lo to hi inclusive.
inline std::vector<double> uniform_grid(double lo, double hi, int points = 512) {
  detail::require(points >= 1, "grid needs at least one point");
  detail::require(lo <= hi, "grid bounds are inverted");
  std::vector<double> grid(static_cast<std::size_t>(points));
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < points; ++i)
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  grid.back() = hi;
  return grid;
}

inline std::string LearningProfile::to_string() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Linear>)
          return "linear:c=" + detail::format_double(k.rate);
        else if constexpr (std::is_same_v<K, Power>)
          return "power:alpha=" + detail::format_double(k.exponent);
        else
          return "plateau:a=" + detail::format_double(k.rate) + ",cap=" + detail::format_double(k.cap);
      },
      kind_);
}

inline LearningProfile LearningProfile::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw domain_error("profile spec needs '<kind>:<params>', got '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto params = detail::parse_params(spec.substr(colon + 1));
  auto lookup = [&](std::string_view key) {
    for (const auto& [k, v] : params)
      if (k == key) return detail::parse_double(v, key);
    throw domain_error("profile spec '" + std::string(spec) + "' lacks '" + std::string(key) + "'");
  };
  auto expect_keys = [&](std::size_t count) {
    if (params.size() != count)
      throw domain_error("profile spec '" + std::string(spec) + "' has unexpected parameters");
  };
  if (kind == "linear") {
    expect_keys(1);
    return linear(lookup("c"));
  }
  if (kind == "power") {
    expect_keys(1);
    return power(lookup("alpha"));
  }
  if (kind == "plateau") {
    expect_keys(2);
    return plateau(lookup("a"), lookup("cap"));
  }
  throw domain_error("unknown profile kind '" + std::string(kind) + "'");
}

}  // namespace jury
