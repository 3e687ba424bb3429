#ifndef ARCSECT_ERRORS_HPP
#define ARCSECT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arcsect {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input expression; `pos` is a 0-based offset into the source text.
struct ParseError : Error {
  size_t pos;
  ParseError(const std::string& what, size_t p)
      : Error(what + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Invalid argument / violated precondition of an operation.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A numerical certification could not be completed at the configured
// precision.  Callers must degrade to an "unknown" outcome, never guess.
struct CertificationError : Error {
  explicit CertificationError(const std::string& what) : Error(what) {}
};

// Input falls outside the supported exact fragment (e.g. an irrational
// blowup center).  Carries a diagnostic for the report.
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

}  // namespace arcsect

#endif
