#pragma once

#include <stdexcept>
#include <string>

namespace compnum {

/// Input violates an operation's precondition (bad dims, invalid index, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A serialized document could not be decoded.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace compnum
