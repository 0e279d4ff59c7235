#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace etale {

enum class ErrorCode {
    ZeroNotInvertible,
    CharacteristicZero,
    NotPrime,
    BothZero,
    ZeroOperand,
    ConstantPolynomial,
    NotMonic,
    AlreadySeparable,
    ZeroDerivative,
    NoSimpleFactor,
    DerivativeNonzero,
    FieldMismatch,
    IndexOutOfRange,
    RingMismatch,
    BudgetExceeded,
    TrivialIdeal,
    NotZeroDimensional,
    DimensionMismatch,
    RepeatedZeroRoot,
    NotInvertible,
    NotIdempotent,
    TrivialIdempotent,
    NotEtale,
    NonEtaleWitness,
    SearchExhausted,
    InvalidAlgebra,
    ParseError,
    InternalContradiction,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported through this type; `code()` names the
/// condition so callers can branch without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace etale
