#pragma once

#include <stdexcept>
#include <string>

namespace fillin_lab {

/// Malformed or out-of-contract input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource guardrail refused the request (CLI exit code 3).
class LimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A proven inequality or certificate property was observed to fail.
/// Never expected in practice; CLI exit code 1.
class ConsistencyFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace fillin_lab
