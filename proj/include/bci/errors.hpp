#pragma once

#include <stdexcept>

namespace bci {

// Bad user input (malformed lambdas, non-tree edge lists, unparsable patterns).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance is outside the class a routine handles (e.g. adjacent trunks).
class UnsupportedClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured budget was exceeded; never degraded into an approximation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal contract was broken; always a bug.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bci
