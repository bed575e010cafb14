#pragma once

// Error taxonomy shared by the library and the CLI.
//
// The CLI maps these to process exit codes:
//   UsageError / ParameterError -> 2
//   CapacityError               -> 3
//   verification failures are reported through result objects, not thrown,
//   and exit with code 1.

#include <stdexcept>
#include <string>

namespace ccsp {

// Bad CLI arguments or malformed config / input files.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input whose parameters violate a documented precondition
// (e.g. epsilon out of range, infeasible derandomization weights).
struct ParameterError : std::runtime_error {
  explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a documented capacity bound (oracle size cap etc.).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccsp
