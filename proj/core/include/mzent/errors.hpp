#ifndef MZENT_ERRORS_HPP
#define MZENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzent {

/// A parameter lies outside the domain of the operation (N < 0, gamma outside [0,1], ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A covariance or density matrix violates the uncertainty principle / positivity
/// by more than the floating-point guard band.
class UnphysicalStateError : public std::runtime_error {
public:
  explicit UnphysicalStateError(const std::string& what) : std::runtime_error(what) {}
};

/// The truncated number basis cannot hold the state to the requested tolerance.
class TruncationError : public std::runtime_error {
public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mzent

#endif  // MZENT_ERRORS_HPP
