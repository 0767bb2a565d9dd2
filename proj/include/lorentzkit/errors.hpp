#ifndef LORENTZKIT_ERRORS_HPP
#define LORENTZKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorentzkit {

enum class ErrorCode {
  FieldMismatch,
  DivisionByZero,
  InvalidField,
  InvalidEmbedding,
  ParseError,
  ZeroCoefficient,
  DimTooSmall,
  DimMismatch,
  NotSymmetric,
  SingularForm,
  NoConjugateForQ,
  PointNotInModel,
  NormalNotSpacelike,
  FormMismatch,
  NotUltraparallel,
  NotFOrthogonal,
  NotAReflection,
  InvalidSideCount,
  EmptyGeneratorSet,
  WordBudgetExceeded,
  InvalidArgument,
};

/// Upper-snake name used in diagnostics, e.g. "NOT_ULTRAPARALLEL".
std::string_view error_code_name(ErrorCode code);

/// Base exception for every library failure. The code is stable and is what
/// the CLI reports; the message is human-oriented.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lorentzkit

#endif  // LORENTZKIT_ERRORS_HPP
