#pragma once

#include <stdexcept>
#include <string>

namespace cuplength {

enum class ErrorKind {
  InvalidArgument,
  InvalidSimplex,
  NonMonotoneGrades,
  MissingFace,
  DuplicateSimplex,
  AsymmetricMatrix,
  NegativeDistance,
  UnknownSimplex,
  SimplexNotAlive,
  NotCriticalValue,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cuplength
