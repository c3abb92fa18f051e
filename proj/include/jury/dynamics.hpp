#pragma once

// Mean-drift competence dynamics.
//
// Voter 1 is a leader who improves on their own, dp_1/dt = m k (1 - p_1).
// Every other voter drifts toward a mean competence, dp_i/dt = mean_i - p_i,
// where mean_i is either the whole group's mean or, with a window of radius
// w, the mean over voters j with |p_j - p_i| <= w (voter i included, so an
// isolated voter sits still).

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jury/errors.hpp"
#include "jury/vote_math.hpp"

namespace jury {

struct DynamicsConfig {
  int n = 1;
  std::vector<double> initial;
  double leader_gain = 0.1;        // k
  double leader_multiplier = 1.0;  // m
  std::optional<double> window;    // absent: every follower sees the global mean
  double t_end = 1.0;
  double step = 0.01;

  void validate() const {
    detail::require(n >= 1, "dynamics need at least one voter");
    detail::require(static_cast<int>(initial.size()) == n,
                    "initial state has " + std::to_string(initial.size()) + " entries, expected " +
                        std::to_string(n));
    for (double p : initial) detail::require_probability(p, "initial competence");
    detail::require(leader_gain >= 0.0, "leader gain must be non-negative");
    detail::require(leader_multiplier > 0.0, "leader multiplier must be positive");
    if (window) detail::require(*window > 0.0, "window radius must be positive");
    detail::require(t_end >= 0.0, "t_end must be non-negative");
    detail::require(step > 0.0, "step must be positive");
  }
};

inline std::vector<double> derivative_field(const DynamicsConfig& config,
                                            std::span<const double> state) {
  const auto n = static_cast<std::size_t>(config.n);
  if (state.size() != n)
    throw domain_error("state has " + std::to_string(state.size()) + " entries, expected " +
                       std::to_string(n));
  std::vector<double> rate(n);
  rate[0] = config.leader_multiplier * config.leader_gain * (1.0 - state[0]);
  double global_mean = 0.0;
  for (double p : state) global_mean += p;
  global_mean /= static_cast<double>(n);
  for (std::size_t i = 1; i < n; ++i) {
    double mean = global_mean;
    if (config.window) {
      double sum = 0.0;
      int members = 0;
      for (double q : state) {
        if (std::abs(q - state[i]) <= *config.window) {
          sum += q;
          ++members;
        }
      }
      mean = sum / members;
    }
    rate[i] = mean - state[i];
  }
  return rate;
}

struct Trajectory {
  DynamicsConfig config;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::vector<double> group_curve;  // majority probability of each state
  std::size_t clamp_events = 0;     // components pulled back into [0,1]

  const std::vector<double>& final_state() const { return states.back(); }
};

/// Group competence of a dynamics state; even groups break ties with a coin.
inline double state_group_competence(std::span<const double> state) {
  return majority_prob_heterogeneous(
      CompetenceVector(std::vector<double>(state.begin(), state.end())),
      MajorityRule::fair_coin());
}

/// Classical fixed-step fourth-order Runge-Kutta from 0 to t_end. The last
/// step is shortened if t_end is not a multiple of the step.
inline Trajectory integrate(const DynamicsConfig& config) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.n);
  const double h = config.step;
  const auto full_steps = static_cast<std::size_t>(std::floor(config.t_end / h + 1e-9));
  const double covered = static_cast<double>(full_steps) * h;
  const bool tail = config.t_end - covered > 1e-12 * std::max(1.0, config.t_end);

  Trajectory traj;
  traj.config = config;
  traj.times.reserve(full_steps + 2);
  traj.states.reserve(full_steps + 2);
  traj.times.push_back(0.0);
  traj.states.push_back(config.initial);

  std::vector<double> x = config.initial;
  std::vector<double> tmp(n);
  auto advance = [&](double dt) {
    const auto k1 = derivative_field(config, x);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    const auto k2 = derivative_field(config, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    const auto k3 = derivative_field(config, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    const auto k4 = derivative_field(config, tmp);
    for (std::size_t i = 0; i < n; ++i) {
      double next = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(next))
        throw integration_failure("non-finite competence for voter " + std::to_string(i + 1));
      if (next < 0.0 || next > 1.0) {
        next = std::clamp(next, 0.0, 1.0);
        ++traj.clamp_events;
      }
      x[i] = next;
    }
  };

  for (std::size_t k = 1; k <= full_steps; ++k) {
    advance(h);
    traj.times.push_back(static_cast<double>(k) * h);
    traj.states.push_back(x);
  }
  if (tail) {
    advance(config.t_end - covered);
    traj.times.push_back(config.t_end);
    traj.states.push_back(x);
  }

  traj.group_curve.reserve(traj.states.size());
  for (const auto& s : traj.states) traj.group_curve.push_back(state_group_competence(s));
  return traj;
}

struct Cluster {
  std::vector<int> members;  // 1-based voter numbers
  double value;              // mean final competence of the members
};

struct Outcome {
  enum class Kind { ConsensusAtOne, Fragmented };
  Kind kind;
  std::vector<Cluster> clusters;  // highest value first; empty for consensus
};

/// Reads the long-run outcome off the final state. Voters whose final
/// competences are chained by gaps of at most 2 tol share a cluster.
inline Outcome classify_outcome(const Trajectory& traj, double tol) {
  detail::require(tol > 0.0, "classification tolerance must be positive");
  detail::require(!traj.states.empty(), "empty trajectory");
  const auto& last = traj.final_state();
  double fastest = 0.0;
  for (double r : derivative_field(traj.config, last)) fastest = std::max(fastest, std::abs(r));
  if (fastest >= tol)
    throw not_converged("trajectory still moving at rate " + std::to_string(fastest) +
                        " at t = " + std::to_string(traj.times.back()));

  if (std::all_of(last.begin(), last.end(), [tol](double p) { return p >= 1.0 - tol; }))
    return {Outcome::Kind::ConsensusAtOne, {}};

  std::vector<int> order(last.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return last[static_cast<std::size_t>(a)] > last[static_cast<std::size_t>(b)];
  });

  std::vector<Cluster> clusters;
  double previous = 0.0;
  for (int idx : order) {
    const double p = last[static_cast<std::size_t>(idx)];
    if (clusters.empty() || previous - p > 2.0 * tol) clusters.push_back({{}, 0.0});
    clusters.back().members.push_back(idx + 1);
    clusters.back().value += p;
    previous = p;
  }
  for (auto& c : clusters) {
    c.value /= static_cast<double>(c.members.size());
    std::sort(c.members.begin(), c.members.end());
  }
  return {Outcome::Kind::Fragmented, std::move(clusters)};
}

}  // namespace jury
