#pragma once

#include <stdexcept>
#include <string>

namespace hopfbrauer {

/// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, invalid arguments, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotFactorizable : public Error {
 public:
  using Error::Error;
};

class NotSubgroup : public Error {
 public:
  using Error::Error;
};

/// Element is not a member of the group it was looked up in.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// An axiom or identity that must hold by construction failed. Indicates a
/// bug in this library, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A checked theorem failed on concrete data.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfbrauer
