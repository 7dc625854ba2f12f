#pragma once

#include <stdexcept>
#include <string>

namespace rcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// x == y passed where an unordered pair of distinct vertices is required.
class InvalidPair : public Error {
 public:
  using Error::Error;
};

class NotAnEdge : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UndefinedDensity : public Error {
 public:
  using Error::Error;
};

}  // namespace rcover
