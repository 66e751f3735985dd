#include "cuplength/error.hpp"

namespace cuplength {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidSimplex: return "InvalidSimplex";
    case ErrorKind::NonMonotoneGrades: return "NonMonotoneGrades";
    case ErrorKind::MissingFace: return "MissingFace";
    case ErrorKind::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorKind::NegativeDistance: return "NegativeDistance";
    case ErrorKind::UnknownSimplex: return "UnknownSimplex";
    case ErrorKind::SimplexNotAlive: return "SimplexNotAlive";
    case ErrorKind::NotCriticalValue: return "NotCriticalValue";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace cuplength
