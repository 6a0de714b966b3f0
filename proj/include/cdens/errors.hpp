#pragma once

#include <stdexcept>
#include <string>

namespace cdens {

// Failure categories. The CLI maps these onto exit codes: resource limits
// exit with 3, everything else that throws is an input/usage problem and
// exits with 2. Verification failures are ordinary return values, not errors.
enum class ErrorKind {
  domain,              // numeric argument outside the mathematical domain
  breakpoint,          // derivative requested at a kink of the bound
  parameter,           // inconsistent analytic parameter block
  argument,            // malformed call (sizes, ranges, duplicate vertices)
  limit,               // enumeration size above the supported hard limits
  format,              // unparsable or inconsistent graph file
  degenerate_link,     // link of a vertex with zero weighted degree
  not_stationary,      // conditional check invoked away from a stationary point
  divergence,          // optimizer produced a non-finite iterate
  unsupported_weights, // operation needs 0/1 edge weights
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace cdens
