#include "biperiodic/errors.hpp"

namespace biperiodic {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DiscriminantMismatch: return "DiscriminantMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace biperiodic
