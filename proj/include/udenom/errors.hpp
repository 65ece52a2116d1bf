#pragma once

#include <stdexcept>
#include <string>

namespace udenom {

// Input text/JSON that does not match the documented shapes.  CLI exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was exceeded (element enumeration, subset count).
// CLI exit code 3.
struct BoundError : std::runtime_error {
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// Eigenvalue multiplicities differ across primitive fractions of the same
// order, so the data cannot come from a rational representation.  CLI exit
// code 4.
struct GaloisUnstableError : std::runtime_error {
  explicit GaloisUnstableError(const std::string& what) : std::runtime_error(what) {}
};

// Semantically inconsistent input or an internal cross-check failure
// (missing identity element, non-integral Molien sum, ...).  CLI exit code 4.
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace udenom
