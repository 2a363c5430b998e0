#pragma once

#include <stdexcept>
#include <string>

namespace uniperf {

// Base of all library errors. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed, inconsistent or incomplete input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// LP construction failures, unexpected infeasibility, consistency violations
// between computed scores.
class SolverError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace uniperf
