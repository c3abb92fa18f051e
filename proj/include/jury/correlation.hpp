#pragma once

// Correlated voters: the pairwise-moment lower bound on the probability of a
// correct majority, closed-form moments of a few vote models, and a seeded
// Monte Carlo sampler for the same models.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "jury/errors.hpp"
#include "jury/text.hpp"
#include "jury/vote_math.hpp"

namespace jury {

/// Competences plus the covariance matrix of the 0/1 vote indicators.
class CovarianceSpec {
 public:
  static constexpr double kTolerance = 1e-12;

  CovarianceSpec(CompetenceVector p, std::vector<double> cov_row_major)
      : p_(std::move(p)), cov_(std::move(cov_row_major)) {
    const auto n = static_cast<std::size_t>(p_.size());
    detail::require(cov_.size() == n * n, "covariance matrix must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
      const double pi = p_[i];
      if (std::abs(at(i, i) - pi * (1.0 - pi)) > kTolerance)
        throw infeasible_spec("covariance diagonal " + std::to_string(i + 1) +
                              " differs from p(1-p)");
      for (std::size_t j = i + 1; j < n; ++j) {
        const double pj = p_[j];
        if (std::abs(at(i, j) - at(j, i)) > kTolerance)
          throw infeasible_spec("covariance matrix is not symmetric");
        const double lower = -std::min(pi * pj, (1.0 - pi) * (1.0 - pj));
        const double upper = std::min(pi * (1.0 - pj), pj * (1.0 - pi));
        if (at(i, j) < lower - kTolerance || at(i, j) > upper + kTolerance)
          throw infeasible_spec("covariance of voters " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " violates the Frechet bounds");
      }
    }
  }

  /// Independent votes: diagonal covariance.
  static CovarianceSpec independent(const CompetenceVector& p) {
    const auto n = static_cast<std::size_t>(p.size());
    std::vector<double> cov(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) cov[i * n + i] = p[i] * (1.0 - p[i]);
    return {p, std::move(cov)};
  }

  const CompetenceVector& competences() const { return p_; }
  int size() const { return p_.size(); }
  double at(std::size_t i, std::size_t j) const {
    return cov_[i * static_cast<std::size_t>(p_.size()) + j];
  }

  /// Var(Z_n): all variances plus twice the pairwise covariances.
  double total_variance() const { return std::accumulate(cov_.begin(), cov_.end(), 0.0); }

 private:
  CompetenceVector p_;
  std::vector<double> cov_;
};

/// Lower bound d^2 / (sigma^2 + d^2), d = n(pbar - 1/2), on the probability
/// of a correct majority for voters with the given first and second moments.
inline double ladha_bound(const CovarianceSpec& spec) {
  const int n = spec.size();
  detail::require(n % 2 == 1, "the correlated-voter bound is stated for odd group sizes");
  const double pbar = spec.competences().mean();
  detail::require(pbar > 0.5, "the correlated-voter bound needs mean competence above 1/2");
  double sigma2 = spec.total_variance();
  if (sigma2 < 0.0) {
    // Rounding in the n^2-term sum scales with the size of its terms.
    double scale = 1.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) scale += std::abs(spec.at(i, j));
    if (sigma2 < -CovarianceSpec::kTolerance * scale)
      throw infeasible_spec("covariances give a negative variance of the vote count");
    sigma2 = 0.0;
  }
  const double d = n * (pbar - 0.5);
  return d * d / (sigma2 + d * d);
}

/// Independent votes with the given competences.
struct IndependentVotes {
  CompetenceVector p;
};

/// With probability mix all n voters copy a single draw that is correct with
/// probability p; otherwise they vote independently with competence p.
struct CommonCoin {
  int n;
  double p;
  double mix;
};

/// A uniformly random subset of exactly ceil(n/2) voters votes correctly.
struct ExactMajoritySet {
  int n;
};

using CorrelatedVoteModel = std::variant<IndependentVotes, CommonCoin, ExactMajoritySet>;

inline int model_size(const CorrelatedVoteModel& model) {
  return std::visit(
      [](const auto& m) -> int {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, IndependentVotes>)
          return m.p.size();
        else
          return m.n;
      },
      model);
}

inline void validate_model(const CorrelatedVoteModel& model) {
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, CommonCoin>) {
          detail::require(m.n >= 1, "group size must be positive");
          detail::require_probability(m.p, "competence");
          detail::require_probability(m.mix, "mixing weight");
        } else if constexpr (std::is_same_v<M, ExactMajoritySet>) {
          detail::require(m.n >= 1 && m.n % 2 == 1, "exact-majority model needs odd n");
        }
      },
      model);
  detail::require(model_size(model) % 2 == 1, "correlated vote models use odd group sizes");
}

inline CovarianceSpec model_moments(const CorrelatedVoteModel& model) {
  validate_model(model);
  if (const auto* m = std::get_if<IndependentVotes>(&model)) return CovarianceSpec::independent(m->p);
  const auto n = static_cast<std::size_t>(model_size(model));
  std::vector<double> cov(n * n);
  double p = 0.0;
  double off = 0.0;
  if (const auto* m = std::get_if<CommonCoin>(&model)) {
    p = m->p;
    off = m->mix * p * (1.0 - p);
  } else {
    const auto& e = std::get<ExactMajoritySet>(model);
    const double nn = e.n;
    const double k = (e.n + 1) / 2;
    p = k / nn;
    // E[X_i X_j] for a uniformly random k-subset is k(k-1) / (n(n-1)).
    if (e.n > 1) off = k * (k - 1.0) / (nn * (nn - 1.0)) - p * p;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cov[i * n + j] = i == j ? p * (1.0 - p) : off;
  return {CompetenceVector::homogeneous(static_cast<int>(n), p), std::move(cov)};
}

/// Exact probability of a correct majority under the model.
inline double model_majority_prob(const CorrelatedVoteModel& model) {
  validate_model(model);
  if (const auto* m = std::get_if<IndependentVotes>(&model)) return majority_prob_heterogeneous(m->p);
  if (const auto* m = std::get_if<CommonCoin>(&model))
    return m->mix * m->p + (1.0 - m->mix) * majority_prob_homogeneous(m->n, m->p);
  return 1.0;
}

struct MonteCarloEstimate {
  double estimate;
  double standard_error;
  std::uint64_t trials;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, range) by rejection, independent of the standard
/// library's distribution implementations.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % range;
}

/// One simulated vote; true when the majority is correct.
inline bool sample_once(const CorrelatedVoteModel& model, std::mt19937_64& rng,
                        std::vector<int>& scratch) {
  if (const auto* m = std::get_if<IndependentVotes>(&model)) {
    int correct = 0;
    for (double p : m->p) correct += unit_uniform(rng) < p;
    return 2 * correct > m->p.size();
  }
  if (const auto* m = std::get_if<CommonCoin>(&model)) {
    if (unit_uniform(rng) < m->mix) {
      return unit_uniform(rng) < m->p;  // n identical votes
    }
    int correct = 0;
    for (int i = 0; i < m->n; ++i) correct += unit_uniform(rng) < m->p;
    return 2 * correct > m->n;
  }
  const auto& e = std::get<ExactMajoritySet>(model);
  const int k = (e.n + 1) / 2;
  // Partial Fisher-Yates: the first k slots form a uniform k-subset.
  std::iota(scratch.begin(), scratch.end(), 0);
  std::vector<int> votes(static_cast<std::size_t>(e.n), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + bounded(rng, static_cast<std::uint64_t>(e.n - i));
    std::swap(scratch[static_cast<std::size_t>(i)], scratch[j]);
    votes[static_cast<std::size_t>(scratch[static_cast<std::size_t>(i)])] = 1;
  }
  return 2 * std::accumulate(votes.begin(), votes.end(), 0) > e.n;
}

}  // namespace detail

/// Trials are split into chunks of kChunkTrials; chunk c draws from an
/// mt19937_64 seeded with splitmix64(seed ^ splitmix64(c)). Chunks run
/// concurrently, and the result depends only on (model, trials, seed).
inline constexpr std::uint64_t kChunkTrials = 1u << 16;

inline MonteCarloEstimate sample_majority_rate(const CorrelatedVoteModel& model,
                                               std::uint64_t trials, std::uint64_t seed) {
  validate_model(model);
  detail::require(trials >= 1, "need at least one trial");
  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  auto run_chunk = [&model, trials, seed](std::uint64_t c) -> std::uint64_t {
    std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(c)));
    std::vector<int> scratch(static_cast<std::size_t>(model_size(model)));
    const std::uint64_t begin = c * kChunkTrials;
    const std::uint64_t end = std::min(trials, begin + kChunkTrials);
    std::uint64_t hits = 0;
    for (std::uint64_t t = begin; t < end; ++t) hits += detail::sample_once(model, rng, scratch);
    return hits;
  };

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, chunks);
  std::vector<std::future<std::uint64_t>> jobs;
  for (std::uint64_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      std::uint64_t hits = 0;
      for (std::uint64_t c = w; c < chunks; c += workers) hits += run_chunk(c);
      return hits;
    }));
  }
  std::uint64_t hits = 0;
  for (auto& job : jobs) hits += job.get();

  const double est = static_cast<double>(hits) / static_cast<double>(trials);
  return {est, std::sqrt(est * (1.0 - est) / static_cast<double>(trials)), trials};
}

/// Model syntax: independent:<p1>,<p2>,...  common:n=<n>,p=<p>,mix=<l>
/// exact-majority:n=<n>
inline CorrelatedVoteModel parse_vote_model(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw domain_error("model spec needs '<kind>:<params>', got '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "independent") return IndependentVotes{CompetenceVector(parse_double_list(rest, "competence"))};
  const auto params = detail::parse_params(rest);
  auto lookup = [&](std::string_view key) {
    for (const auto& [k, v] : params)
      if (k == key) return detail::parse_double(v, key);
    throw domain_error("model spec '" + std::string(spec) + "' lacks '" + std::string(key) + "'");
  };
  auto as_int = [](double v) {
    detail::require(v >= 1 && v == std::floor(v) && v < 1e6, "group size must be a positive integer");
    return static_cast<int>(v);
  };
  CorrelatedVoteModel model = IndependentVotes{CompetenceVector{0.5}};
  if (kind == "common")
    model = CommonCoin{as_int(lookup("n")), lookup("p"), lookup("mix")};
  else if (kind == "exact-majority")
    model = ExactMajoritySet{as_int(lookup("n"))};
  else
    throw domain_error("unknown vote model '" + std::string(kind) + "'");
  validate_model(model);
  return model;
}

}  // namespace jury
