#ifndef HCSP_ERROR_HPP
#define HCSP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hcsp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Checked integer arithmetic left the range of std::uint64_t.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// An argument is outside the domain of the operation (s = 0, element out of range, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A structural precondition on a set system does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed or invalid serialized system.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace hcsp

#endif
