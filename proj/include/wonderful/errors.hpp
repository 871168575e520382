#pragma once

#include <stdexcept>
#include <string>

namespace wonderful {

/// Rejection of user-supplied input (bad Cartan string, out-of-range subset,
/// malformed Satake diagram, exceeded enumeration cap, ...).  The CLI maps
/// this to exit status 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A "must equal" internal cross-check failed.  This never indicates bad user
/// input; it means a computation contradicts an identity the library is built
/// on.  The CLI maps this to exit status 2.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wonderful
