#pragma once

#include <stdexcept>
#include <string>

namespace fdzeta {

/// The decay-amplitude coefficient vanishes at eta = 0, so the decay rate is
/// indeterminate there; callers take the two-term branch with b = 0 instead.
class DegenerateEtaError : public std::domain_error {
 public:
  explicit DegenerateEtaError(const std::string& what) : std::domain_error(what) {}
};

/// The fitted decay rate left the range where the zeta representation of the
/// closed form converges.
class ModelBreakdownError : public std::runtime_error {
 public:
  explicit ModelBreakdownError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative routine (root bracketing, quadrature refinement, series
/// summation) exhausted its budget before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fdzeta
