#include <gtest/gtest.h>

#include <cmath>

#include "jury/dynamics.hpp"
#include "jury/scenarios.hpp"

using namespace jury;

namespace {

DynamicsConfig global3(std::vector<double> initial, double t_end = 10.0) {
  DynamicsConfig cfg;
  cfg.n = static_cast<int>(initial.size());
  cfg.initial = std::move(initial);
  cfg.leader_gain = 0.1;
  cfg.t_end = t_end;
  return cfg;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

TEST(DerivativeField, Examples) {
  const auto cfg = global3({0.5, 0.5, 0.5});
  const auto flat = derivative_field(cfg, cfg.initial);
  EXPECT_DOUBLE_EQ(flat[0], 0.05);
  EXPECT_DOUBLE_EQ(flat[1], 0.0);
  EXPECT_DOUBLE_EQ(flat[2], 0.0);

  const std::vector<double> spread{0.9, 0.6, 0.3};
  const auto r = derivative_field(cfg, spread);
  EXPECT_NEAR(r[0], 0.01, 1e-15);
  EXPECT_NEAR(r[1], 0.0, 1e-15);
  EXPECT_NEAR(r[2], 0.3, 1e-15);

  auto windowed = cfg;
  windowed.window = 0.1;
  const auto w = derivative_field(windowed, std::vector<double>{0.9, 0.6, 0.55});
  EXPECT_NEAR(w[0], 0.01, 1e-15);
  EXPECT_NEAR(w[1], -0.025, 1e-15);
  EXPECT_NEAR(w[2], 0.025, 1e-15);

  EXPECT_THROW(derivative_field(cfg, std::vector<double>{0.5, 0.5}), domain_error);
}

TEST(DerivativeField, IsolatedFollowerStaysPut) {
  auto cfg = global3({0.9, 0.2, 0.6});
  cfg.window = 0.05;
  const auto r = derivative_field(cfg, cfg.initial);
  EXPECT_DOUBLE_EQ(r[1], 0.0);
  EXPECT_DOUBLE_EQ(r[2], 0.0);
}

TEST(DerivativeField, MultiplierScalesLeader) {
  auto cfg = global3({0.6, 0.5, 0.5});
  cfg.leader_multiplier = 2.0;
  EXPECT_NEAR(derivative_field(cfg, cfg.initial)[0], 0.08, 1e-15);
}

TEST(Integrate, LeaderAloneFollowsClosedForm) {
  const auto traj = integrate(global3({0.5}, 10.0));
  EXPECT_NEAR(traj.final_state()[0], 1.0 - 0.5 * std::exp(-1.0), 1e-6);
  EXPECT_NEAR(traj.final_state()[0], 0.81606, 1e-5);
  EXPECT_NEAR(traj.times.back(), 10.0, 1e-12);
  EXPECT_DOUBLE_EQ(traj.group_curve.back(), traj.final_state()[0]);
}

TEST(Integrate, EqualStateWithIdleLeaderIsConstant) {
  auto cfg = global3({0.6, 0.6, 0.6, 0.6}, 5.0);
  cfg.leader_gain = 0.0;
  const auto traj = integrate(cfg);
  for (const auto& s : traj.states)
    for (double p : s) EXPECT_DOUBLE_EQ(p, 0.6);
}

TEST(Integrate, GlobalModelLiftsEveryone) {
  const auto traj = integrate(global3({0.3, 0.7, 0.45}, 200.0));
  for (double p : traj.final_state()) EXPECT_GT(p, 0.999);
  EXPECT_GT(traj.group_curve.back(), 0.999);
}

TEST(Integrate, TimesStrictlyIncreaseAndPartialLastStep) {
  auto cfg = global3({0.5, 0.5, 0.6}, 1.005);
  cfg.step = 0.01;
  const auto traj = integrate(cfg);
  for (std::size_t k = 1; k < traj.times.size(); ++k) EXPECT_GT(traj.times[k], traj.times[k - 1]);
  EXPECT_DOUBLE_EQ(traj.times.back(), 1.005);
  EXPECT_EQ(traj.times.size(), traj.states.size());
  EXPECT_EQ(traj.times.size(), traj.group_curve.size());
}

TEST(Integrate, RejectsBadConfig) {
  auto cfg = global3({0.5, 0.5});
  cfg.n = 3;
  EXPECT_THROW(integrate(cfg), domain_error);
  cfg = global3({0.5, 1.5});
  EXPECT_THROW(integrate(cfg), domain_error);
  cfg = global3({0.5});
  cfg.step = 0.0;
  EXPECT_THROW(integrate(cfg), domain_error);
}

TEST(Integrate, NonFiniteStateIsReported) {
  auto cfg = global3({0.5, 0.5});
  cfg.leader_gain = 1e308;
  cfg.leader_multiplier = 1e10;
  EXPECT_THROW(integrate(cfg), integration_failure);
}

TEST(GlobalModel, StaysWithinInitialRangeWithoutClamping) {
  for (const auto& init : std::vector<std::vector<double>>{{0.55, 0.75, 0.45}, {0.1, 0.9, 0.4, 0.7}, {0.9, 0.1, 0.2}}) {
    auto cfg = global3(init, 80.0);
    const auto traj = integrate(cfg);
    const double lo = *std::min_element(init.begin(), init.end());
    for (const auto& s : traj.states)
      for (double p : s) {
        EXPECT_GE(p, lo - 1e-12);
        EXPECT_LE(p, 1.0);
      }
    EXPECT_EQ(traj.clamp_events, 0U);
  }
}

// Followers drift toward a mean that includes themselves, so the follower
// drifts sum to p_1 - mean and d(mean)/dt = (m k (1 - p_1) + p_1 - mean) / n.
TEST(GlobalModel, MeanRateIdentity) {
  auto cfg = global3({0.3, 0.8, 0.6, 0.7});
  cfg.leader_multiplier = 1.5;
  const auto r = derivative_field(cfg, cfg.initial);
  double rate_sum = 0.0;
  for (double x : r) rate_sum += x;
  const double m = mean_of(cfg.initial);
  const double p1 = cfg.initial[0];
  EXPECT_NEAR(rate_sum / cfg.n, (1.5 * 0.1 * (1.0 - p1) + p1 - m) / cfg.n, 1e-15);
}

TEST(GlobalModel, MeanNonDecreasingForDrift3) {
  const auto traj = integrate(scenario_preset("drift3"));
  for (std::size_t k = 1; k < traj.states.size(); ++k)
    EXPECT_GE(mean_of(traj.states[k]), mean_of(traj.states[k - 1]) - 1e-15) << "k=" << k;
}

// A leader far below the group drags the global mean down at first.
TEST(GlobalModel, MeanCanFallWhileLeaderTrails) {
  auto cfg = global3({0.1, 0.9, 0.9}, 1.0);
  const auto traj = integrate(cfg);
  EXPECT_LT(mean_of(traj.states[1]), mean_of(traj.states[0]));
}

TEST(GlobalModel, Drift3VoterTwoDipsThenRecovers) {
  const auto traj = integrate(scenario_preset("drift3"));
  ASSERT_GT(traj.states.size(), 20U);
  for (std::size_t k = 1; k <= 10; ++k) EXPECT_LT(traj.states[k][1], traj.states[k - 1][1]);
  std::size_t low = 0;
  for (std::size_t k = 1; k < traj.states.size(); ++k)
    if (traj.states[k][1] < traj.states[low][1]) low = k;
  EXPECT_GT(low, 0U);
  EXPECT_GT(traj.final_state()[1], traj.states[low][1]);
  for (double p : traj.final_state()) EXPECT_GT(p, 0.99);
}

TEST(GlobalModel, StepHalvingAgrees) {
  auto cfg = global3({0.55, 0.75, 0.45}, 50.0);
  cfg.step = 0.01;
  const auto coarse = integrate(cfg);
  cfg.step = 0.005;
  const auto fine = integrate(cfg);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(std::abs(coarse.final_state()[i] - fine.final_state()[i]), 1e-8);
}

TEST(ClassifyOutcome, HandMadeFinalStates) {
  DynamicsConfig cfg;
  cfg.n = 4;
  cfg.window = 0.15;
  cfg.t_end = 0.0;

  Trajectory ones{cfg, {0.0}, {{1.0, 1.0, 1.0, 1.0}}, {1.0}, 0};
  ones.config.initial = ones.states[0];
  EXPECT_EQ(classify_outcome(ones, 0.01).kind, Outcome::Kind::ConsensusAtOne);

  Trajectory split{cfg, {0.0}, {{1.0, 0.52, 0.52, 0.52}}, {0.0}, 0};
  const auto out = classify_outcome(split, 0.01);
  ASSERT_EQ(out.kind, Outcome::Kind::Fragmented);
  ASSERT_EQ(out.clusters.size(), 2U);
  EXPECT_EQ(out.clusters[0].members, (std::vector<int>{1}));
  EXPECT_DOUBLE_EQ(out.clusters[0].value, 1.0);
  EXPECT_EQ(out.clusters[1].members, (std::vector<int>{2, 3, 4}));
  EXPECT_NEAR(out.clusters[1].value, 0.52, 1e-15);

  Trajectory pairs{cfg, {0.0}, {{1.0, 1.0, 0.41, 0.41}}, {0.0}, 0};
  const auto two = classify_outcome(pairs, 0.01);
  ASSERT_EQ(two.kind, Outcome::Kind::Fragmented);
  ASSERT_EQ(two.clusters.size(), 2U);
  EXPECT_EQ(two.clusters[0].members, (std::vector<int>{1, 2}));
  EXPECT_EQ(two.clusters[1].members, (std::vector<int>{3, 4}));
}

TEST(ClassifyOutcome, UnsettledTrajectoryIsRejected) {
  auto cfg = global3({0.5, 0.6, 0.4}, 1.0);
  EXPECT_THROW(classify_outcome(integrate(cfg), 1e-3), not_converged);
}

TEST(WindowScenarios, ThreeOutcomes) {
  const auto consensus = classify_outcome(integrate(scenario_preset("window4-consensus")), 1e-3);
  EXPECT_EQ(consensus.kind, Outcome::Kind::ConsensusAtOne);

  const auto low = classify_outcome(integrate(scenario_preset("window4-lowstart")), 1e-3);
  ASSERT_EQ(low.kind, Outcome::Kind::Fragmented);
  ASSERT_EQ(low.clusters.size(), 2U);
  EXPECT_EQ(low.clusters[0].members, (std::vector<int>{1, 2}));
  EXPECT_EQ(low.clusters[1].members, (std::vector<int>{3, 4}));
  EXPECT_LT(low.clusters[1].value, 0.5);

  const auto fast = classify_outcome(integrate(scenario_preset("window4-fastleader")), 1e-3);
  ASSERT_EQ(fast.kind, Outcome::Kind::Fragmented);
  ASSERT_EQ(fast.clusters.size(), 2U);
  EXPECT_EQ(fast.clusters[0].members, (std::vector<int>{1}));
  EXPECT_EQ(fast.clusters[1].members, (std::vector<int>{2, 3, 4}));
  EXPECT_GT(fast.clusters[1].value, 0.5);
  EXPECT_LT(fast.clusters[1].value, 0.6);
}

TEST(WindowScenarios, SomeFollowerInitiallyDeclines) {
  const auto cfg = scenario_preset("window4-consensus");
  const auto r = derivative_field(cfg, cfg.initial);
  EXPECT_LT(*std::min_element(r.begin() + 1, r.end()), 0.0);
}

TEST(WindowScenarios, PresetsDifferOnlyWhereDescribed) {
  const auto base = scenario_preset("window4-consensus");
  const auto low = scenario_preset("window4-lowstart");
  const auto fast = scenario_preset("window4-fastleader");
  EXPECT_EQ(base.initial[0], low.initial[0]);
  EXPECT_EQ(base.initial[1], low.initial[1]);
  EXPECT_LT(low.initial[2], base.initial[2]);
  EXPECT_EQ(base.initial[3], low.initial[3]);
  EXPECT_EQ(base.initial, fast.initial);
  EXPECT_EQ(fast.leader_multiplier, 2.0 * base.leader_multiplier);
}

TEST(DynamicsConfigText, ParsesAllKeys) {
  const auto cfg = parse_dynamics_config(
      "# comment\n"
      "n = 3\n"
      "initial = 0.1, 0.2,0.3   # trailing\n"
      "kappa = 0.25\n"
      "multiplier = 3\n"
      "window = 0.2\n"
      "t_end = 4\n"
      "step = 0.05\n");
  EXPECT_EQ(cfg.n, 3);
  EXPECT_EQ(cfg.initial, (std::vector<double>{0.1, 0.2, 0.3}));
  EXPECT_EQ(cfg.leader_gain, 0.25);
  EXPECT_EQ(cfg.leader_multiplier, 3.0);
  ASSERT_TRUE(cfg.window.has_value());
  EXPECT_EQ(*cfg.window, 0.2);
  EXPECT_EQ(cfg.t_end, 4.0);
  EXPECT_EQ(cfg.step, 0.05);
}

TEST(DynamicsConfigText, RejectsMalformedInput) {
  EXPECT_THROW(parse_dynamics_config("initial = 0.5\n"), domain_error);
  EXPECT_THROW(parse_dynamics_config("t_end = 1\n"), domain_error);
  EXPECT_THROW(parse_dynamics_config("initial = 0.5\nt_end = 1\nspeed = 2\n"), domain_error);
  EXPECT_THROW(parse_dynamics_config("n = 2\ninitial = 0.5\nt_end = 1\n"), domain_error);
  EXPECT_THROW(parse_dynamics_config("initial 0.5\n"), domain_error);
  EXPECT_THROW(scenario_preset("nope"), domain_error);
}
