#pragma once

#include <stdexcept>
#include <string>

namespace multigame {

// Malformed or invariant-violating input (payoffs, type spaces, files, flags).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver could not produce the result its contract promises.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace multigame
