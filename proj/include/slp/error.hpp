#ifndef SLP_ERROR_HPP
#define SLP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace slp {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; `offset` is the byte position of the first bad byte.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Input is structurally valid but outside what the operation supports.
struct UnsupportedError : Error {
  using Error::Error;
};

// A configured size/work budget would be exceeded.  Never silently truncates.
struct BudgetError : Error {
  using Error::Error;
};

// Kernel dimension differs from what the reconstruction pipeline requires.
struct NullityError : Error {
  int observed;
  NullityError(const std::string& msg, int obs) : Error(msg), observed(obs) {}
};

// Vector normalization failed (zero vector or zero pinned component).
struct NormalizationError : Error {
  using Error::Error;
};

}  // namespace slp

#endif
