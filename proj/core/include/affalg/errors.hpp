#ifndef AFFALG_ERRORS_HPP
#define AFFALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace affalg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define AFFALG_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}      \
  }

AFFALG_DEFINE_ERROR(DivisionByZero);
AFFALG_DEFINE_ERROR(DimensionMismatch);
AFFALG_DEFINE_ERROR(FieldMismatch);
AFFALG_DEFINE_ERROR(NotSquare);
AFFALG_DEFINE_ERROR(ArityMismatch);
AFFALG_DEFINE_ERROR(InsufficientSamples);
AFFALG_DEFINE_ERROR(NotAffine);
AFFALG_DEFINE_ERROR(AlphaNotIdentity);
AFFALG_DEFINE_ERROR(AlphaNotMultiplicative);
AFFALG_DEFINE_ERROR(AlphaIncompatible);
AFFALG_DEFINE_ERROR(PreconditionFailed);
AFFALG_DEFINE_ERROR(NotEndomorphism);
AFFALG_DEFINE_ERROR(DataInvariantViolated);
AFFALG_DEFINE_ERROR(NotFixedPoint);
AFFALG_DEFINE_ERROR(NotInDelta);
AFFALG_DEFINE_ERROR(NotInPairSpace);
AFFALG_DEFINE_ERROR(PsiNotInvertible);
AFFALG_DEFINE_ERROR(DataHomInvalid);
AFFALG_DEFINE_ERROR(InternalInconsistency);
AFFALG_DEFINE_ERROR(ClosureFailure);
AFFALG_DEFINE_ERROR(PNotInvertible);
AFFALG_DEFINE_ERROR(EmptyPairSpace);
AFFALG_DEFINE_ERROR(FieldError);
AFFALG_DEFINE_ERROR(SchemaError);

#undef AFFALG_DEFINE_ERROR

/// JSON syntax error with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& what)
      : Error("SyntaxError at " + std::to_string(line) + ":" +
              std::to_string(col) + ": " + what),
        line(line), col(col) {}
  std::size_t line;
  std::size_t col;
};

} // namespace affalg

#endif
