#ifndef OPO_ERRORS_HPP
#define OPO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opo {

/// Malformed input: bad field values, shape violations, unknown config keys.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A variance/correlation combination that cannot be the covariance of any
/// state (not positive definite). Carries the offending eigenvalue.
class PhysicalityError : public std::runtime_error {
 public:
  PhysicalityError(const std::string& what, double offending_eigenvalue)
      : std::runtime_error(what), offending_eigenvalue_(offending_eigenvalue) {}

  double offending_eigenvalue() const { return offending_eigenvalue_; }

 private:
  double offending_eigenvalue_;
};

/// Least-squares search could not produce a result (e.g. no feasible point).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opo

#endif  // OPO_ERRORS_HPP
