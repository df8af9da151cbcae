#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wlpkit {

enum class Errc {
  field_mismatch,
  division_by_zero,
  context_mismatch,
  degree_underflow,
  all_zero,
  char_too_small,
  not_standard,
  not_artinian,
  empty_component,
  char_not_zero,
  wrong_shape,
  constraint_unsatisfied,
  dependent_generators,
  unknown_example,
  parse_error,
  non_prime_modulus,
  not_homogeneous,
  invalid_argument,
  overflow,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::degree_underflow: return "DegreeUnderflow";
    case Errc::all_zero: return "AllZero";
    case Errc::char_too_small: return "CharTooSmall";
    case Errc::not_standard: return "NotStandard";
    case Errc::not_artinian: return "NotArtinian";
    case Errc::empty_component: return "EmptyComponent";
    case Errc::char_not_zero: return "CharNotZero";
    case Errc::wrong_shape: return "WrongShape";
    case Errc::constraint_unsatisfied: return "ConstraintUnsatisfied";
    case Errc::dependent_generators: return "DependentGenerators";
    case Errc::unknown_example: return "UnknownExample";
    case Errc::parse_error: return "ParseError";
    case Errc::non_prime_modulus: return "NonPrimeModulus";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse_error, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wlpkit
