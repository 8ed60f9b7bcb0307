#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biperiodic {

enum class ErrorKind {
  DivisionByZero,
  DiscriminantMismatch,
  SingularMatrix,
  DegenerateDiscriminant,
  InvalidParameter,
  ParityMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. Domain conditions (a singular
/// generating matrix, a repeated characteristic root) are reported through
/// this hierarchy, never through sentinel values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define BIPERIODIC_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {} \
  }

BIPERIODIC_DEFINE_ERROR(DivisionByZero);
BIPERIODIC_DEFINE_ERROR(DiscriminantMismatch);
BIPERIODIC_DEFINE_ERROR(SingularMatrix);
BIPERIODIC_DEFINE_ERROR(DegenerateDiscriminant);
BIPERIODIC_DEFINE_ERROR(InvalidParameter);
BIPERIODIC_DEFINE_ERROR(ParityMismatch);
BIPERIODIC_DEFINE_ERROR(ParseError);

#undef BIPERIODIC_DEFINE_ERROR

}  // namespace biperiodic
