#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rext {

/// Malformed arguments: mixed variable tags, zero polynomial where a nonzero
/// one is required, incompatible quasi-rational sums and the like.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configuration broke one or more of the named admissibility rules.
class AdmissibilityError : public std::runtime_error {
 public:
  explicit AdmissibilityError(std::vector<std::string> rules, const std::string& what)
      : std::runtime_error(what), rules_(std::move(rules)) {}

  const std::vector<std::string>& rules() const { return rules_; }

 private:
  std::vector<std::string> rules_;
};

/// Pointwise evaluation hit a pole.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The tridiagonal eigensolver did not converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rext
