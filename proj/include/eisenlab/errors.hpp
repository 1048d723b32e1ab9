#pragma once

#include <stdexcept>
#include <string>

namespace eisenlab {

/// Raised when an argument sits on a pole of Gamma, zeta or an L-function.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A requested accuracy cannot be met within the term or node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// L(s) is too close to zero for a logarithmic derivative to be meaningful.
class ZeroOfLError : public std::domain_error {
 public:
  explicit ZeroOfLError(const std::string& what) : std::domain_error(what) {}
};

class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// An evaluation point cannot be routed into the convergent region of any
/// available expansion.
class EvaluationFloorError : public std::runtime_error {
 public:
  explicit EvaluationFloorError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eisenlab
