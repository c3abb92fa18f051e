#pragma once

#include <stdexcept>
#include <string>

namespace jury {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's mathematical domain.
class domain_error : public error {
 public:
  using error::error;
};

/// Even group size evaluated without a tie-breaking rule.
class tie_rule_required : public domain_error {
 public:
  explicit tie_rule_required(int n)
      : domain_error("even group size " + std::to_string(n) +
                     " requires a tie-breaking rule") {}
};

/// Target group competence cannot be reached by the given profile.
class unattainable_target : public error {
 public:
  using error::error;
};

/// Covariance data that no joint distribution can produce.
class infeasible_spec : public error {
 public:
  using error::error;
};

class integration_failure : public error {
 public:
  using error::error;
};

/// Trajectory has not settled to the requested tolerance.
class not_converged : public error {
 public:
  using error::error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw domain_error(message);
}

inline void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw domain_error(std::string(what) + " must lie in [0,1], got " +
                       std::to_string(p));
}

}  // namespace detail
}  // namespace jury
