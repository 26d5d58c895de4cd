#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace vklab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Malformed text input (words, braids, paths, .bmf/.gp/.sheets files,
 * polynomial expressions).  The CLI maps this to its own exit code. */
struct ParseError : Error {
  using Error::Error;
};

/* Numeric fiber tracking gave up (step underflow, lost roots, loop too
 * close to a critical disk).  Carries the parameter point where it died. */
struct TrackingError : Error {
  std::complex<double> where;
  TrackingError(const std::string& msg, std::complex<double> at)
      : Error(msg), where(at) {}
};

/* A requested operation refused its input after a checkable precondition
 * failed (e.g. projectivizing a factorization whose product is not the
 * full twist). */
struct Refusal : Error {
  using Error::Error;
};

}  // namespace vklab
