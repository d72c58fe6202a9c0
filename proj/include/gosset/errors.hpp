#pragma once

#include <stdexcept>
#include <string>

namespace gosset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or argument outside the supported domain (bad rank, infeasible
// simplex triple, class of the wrong kind, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structural claim that must hold for every instance did not: an exact
// division left a remainder, a decomposition was not unique, a transform
// left the line set. These are reported separately from ordinary check
// failures.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gosset
