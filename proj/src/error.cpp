#include "irrmeasure/error.hpp"

namespace irrmeasure {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MixedField: return "MixedField";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NegativeArgument: return "NegativeArgument";
        case ErrorCode::RationalInput: return "RationalInput";
        case ErrorCode::FormMismatch: return "FormMismatch";
        case ErrorCode::IntegralSumOrDiff: return "IntegralSumOrDiff";
        case ErrorCode::UndecidedSign: return "UndecidedSign";
        case ErrorCode::NotFoundInRange: return "NotFoundInRange";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::DichotomyViolation: return "DichotomyViolation";
        case ErrorCode::GapViolation: return "GapViolation";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace irrmeasure
