#include "etale/error.hpp"

namespace etale {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroNotInvertible: return "ZeroNotInvertible";
        case ErrorCode::CharacteristicZero: return "CharacteristicZero";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ZeroOperand: return "ZeroOperand";
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::AlreadySeparable: return "AlreadySeparable";
        case ErrorCode::ZeroDerivative: return "ZeroDerivative";
        case ErrorCode::NoSimpleFactor: return "NoSimpleFactor";
        case ErrorCode::DerivativeNonzero: return "DerivativeNonzero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::TrivialIdeal: return "TrivialIdeal";
        case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::RepeatedZeroRoot: return "RepeatedZeroRoot";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NotIdempotent: return "NotIdempotent";
        case ErrorCode::TrivialIdempotent: return "TrivialIdempotent";
        case ErrorCode::NotEtale: return "NotEtale";
        case ErrorCode::NonEtaleWitness: return "NonEtaleWitness";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalContradiction: return "InternalContradiction";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace etale
