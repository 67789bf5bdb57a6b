#ifndef LIEBRANCH_ERRORS_HPP
#define LIEBRANCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liebranch {

// Thrown when a computation would exceed a hard resource guard
// (Weyl group size, product support, partition depth, ...).
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when two routes that must agree disagree, or an engine produces
// a value that is impossible for a correct implementation (for example a
// negative multiplicity at a dominant weight). Always a bug, never user error.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace liebranch

#endif
