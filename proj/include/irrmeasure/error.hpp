#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irrmeasure {

enum class ErrorCode {
    MixedField,
    DivisionByZero,
    NegativeArgument,
    RationalInput,
    FormMismatch,
    IntegralSumOrDiff,
    UndecidedSign,
    NotFoundInRange,
    PreconditionFailed,
    DichotomyViolation,
    GapViolation,
    SearchExhausted,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All domain failures surface as this exception; `code()` is machine-readable.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace irrmeasure
