#pragma once

// Exact majority-vote probabilities for independent voters.
//
// The number of correct votes Z_n = X_1 + ... + X_n of independent voters
// with competences p_i follows a Poisson binomial law. Its mass function is
// built by convolving one voter at a time (O(n^2), all terms non-negative),
// which keeps the tail sums accurate to a few ulps for the group sizes used
// here (n up to a few thousand).

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "jury/errors.hpp"
#include "jury/rational.hpp"

namespace jury {

enum class TieBreak { FairCoin, Fail };

/// Simple majority. The tie rule is only consulted for even group sizes.
struct MajorityRule {
  TieBreak tie_break = TieBreak::Fail;

  static constexpr MajorityRule fair_coin() { return {TieBreak::FairCoin}; }
  static constexpr MajorityRule odd_only() { return {TieBreak::Fail}; }
};

/// Per-voter probabilities of voting for the correct alternative.
class CompetenceVector {
 public:
  explicit CompetenceVector(std::vector<double> probs) : probs_(std::move(probs)) {
    detail::require(!probs_.empty(), "competence vector must have at least one voter");
    for (double p : probs_) detail::require_probability(p, "competence");
  }
  CompetenceVector(std::initializer_list<double> probs)
      : CompetenceVector(std::vector<double>(probs)) {}

  /// n copies of p.
  static CompetenceVector homogeneous(int n, double p) {
    detail::require(n >= 1, "group size must be positive");
    return CompetenceVector(std::vector<double>(static_cast<std::size_t>(n), p));
  }

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> values() const { return probs_; }
  auto begin() const { return probs_.begin(); }
  auto end() const { return probs_.end(); }

  double mean() const {
    return std::accumulate(probs_.begin(), probs_.end(), 0.0) /
           static_cast<double>(probs_.size());
  }

  friend bool operator==(const CompetenceVector&, const CompetenceVector&) = default;

 private:
  std::vector<double> probs_;
};

/// mass[k] = Pr(Z_n = k), k = 0..n.
struct VoteDistribution {
  std::vector<double> mass;

  int voters() const { return static_cast<int>(mass.size()) - 1; }

  /// Pr(Z_n > n/2), plus half the tie mass under FairCoin for even n.
  double majority_probability(MajorityRule rule) const {
    const int n = voters();
    if (n % 2 == 0 && rule.tie_break == TieBreak::Fail) throw tie_rule_required(n);
    // Sum both tails and subtract the smaller one from 1, so that values near
    // 1 keep the relative accuracy of the small failure probability.
    const double tie = n % 2 == 0 ? 0.5 * mass[static_cast<std::size_t>(n / 2)] : 0.0;
    double upper = tie;
    double lower = tie;
    for (int k = n; 2 * k > n; --k) upper += mass[static_cast<std::size_t>(k)];
    for (int k = 0; 2 * k < n; ++k) lower += mass[static_cast<std::size_t>(k)];
    return upper <= lower ? upper : 1.0 - lower;
  }
};

inline VoteDistribution vote_distribution(const CompetenceVector& p) {
  std::vector<double> mass(static_cast<std::size_t>(p.size()) + 1, 0.0);
  mass[0] = 1.0;
  std::size_t filled = 0;
  for (double q : p) {
    ++filled;
    for (std::size_t k = filled; k > 0; --k) mass[k] = mass[k] * (1.0 - q) + mass[k - 1] * q;
    mass[0] *= 1.0 - q;
  }
  return {std::move(mass)};
}

inline double majority_prob_heterogeneous(const CompetenceVector& p,
                                          MajorityRule rule = MajorityRule::odd_only()) {
  if (p.size() % 2 == 0 && rule.tie_break == TieBreak::Fail) throw tie_rule_required(p.size());
  return vote_distribution(p).majority_probability(rule);
}

/// P(n,p): probability that n independent voters of competence p reach a
/// correct majority.
inline double majority_prob_homogeneous(int n, double p,
                                        MajorityRule rule = MajorityRule::odd_only()) {
  detail::require(n >= 1, "group size must be positive");
  detail::require_probability(p, "competence");
  if (n % 2 == 0 && rule.tie_break == TieBreak::Fail) throw tie_rule_required(n);
  return majority_prob_heterogeneous(CompetenceVector::homogeneous(n, p), rule);
}

/// Exact dP(n,p)/dp at p = 1/2 for odd n, n * C(n-1,(n-1)/2) / 2^(n-1).
inline Rational derivative_at_half(int n) {
  if (n < 1 || n % 2 == 0)
    throw domain_error("derivative at 1/2 needs an odd positive group size, got " +
                       std::to_string(n));
  const auto m = static_cast<unsigned>(n - 1);
  return Rational(BigInt(n) * binomial(m, m / 2), BigInt(1) << m);
}

/// The mean-pbar composition that puts as much mass as possible on certain
/// voters: floor(pbar n) ones, one voter holding the fractional remainder,
/// zeros elsewhere.
inline CompetenceVector hoeffding_extremal(int n, double pbar) {
  detail::require(n >= 1, "group size must be positive");
  detail::require_probability(pbar, "mean competence");
  double total = pbar * n;
  // Snap totals that are integers up to rounding, e.g. 0.6 * 5.
  if (std::abs(total - std::round(total)) < 1e-12) total = std::round(total);
  const int ones = std::min(n, static_cast<int>(std::floor(total)));
  std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
  std::fill_n(probs.begin(), ones, 1.0);
  if (ones < n) probs[static_cast<std::size_t>(ones)] = total - ones;
  return CompetenceVector(std::move(probs));
}

/// Absolute slack on prefix-sum comparisons in majorizes().
inline constexpr double kMajorizationSlack = 1e-12;

/// True iff every prefix sum of a (sorted non-increasingly) is at least the
/// matching prefix sum of b. Equal totals are not required.
inline bool majorizes(const CompetenceVector& a, const CompetenceVector& b) {
  if (a.size() != b.size())
    throw domain_error("majorization compares vectors of equal length, got " +
                       std::to_string(a.size()) + " and " + std::to_string(b.size()));
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  double prefix_a = 0.0;
  double prefix_b = 0.0;
  for (std::size_t j = 0; j < sa.size(); ++j) {
    prefix_a += sa[j];
    prefix_b += sb[j];
    if (prefix_a < prefix_b - kMajorizationSlack) return false;
  }
  return true;
}

/// Upper bound 2 exp(-d^2/n), d = n(pbar - 1/2), on the probability that the
/// majority is wrong.
///
/// This uses the constant 1 in the exponent; the sharper standard form of
/// Hoeffding's inequality has 2d^2/n, so the value returned here is valid but
/// loose.
inline double concentration_failure_bound(int n, double pbar) {
  detail::require(n >= 1, "group size must be positive");
  detail::require_probability(pbar, "mean competence");
  detail::require(pbar >= 0.5, "concentration bound needs mean competence >= 1/2");
  const double d = n * (pbar - 0.5);
  return 2.0 * std::exp(-d * d / n);
}

}  // namespace jury
