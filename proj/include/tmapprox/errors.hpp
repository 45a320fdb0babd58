#pragma once

#include <stdexcept>
#include <string>

namespace tmapprox {

// Argument outside the documented domain (lambda <= 0, Im a_k <= 0, bad index...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rational function was evaluated at (or numerically at) one of its poles.
class PoleEvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computed quantity violated an identity it must satisfy (e.g. an error
// functional with a non-negligible imaginary part).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normal equations too ill-conditioned to trust. Carries the condition estimate.
class RankDeficiencyError : public std::runtime_error {
 public:
  RankDeficiencyError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class IllConditionedError : public std::runtime_error {
 public:
  IllConditionedError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace tmapprox
