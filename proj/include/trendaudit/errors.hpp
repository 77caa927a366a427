#pragma once

#include <stdexcept>
#include <string>

namespace trendaudit {

// Error taxonomy. Codes group into two CLI exit classes: data errors
// (malformed or unusable input) and statistical precondition violations
// (input is well-formed but too small / degenerate for the requested
// computation).
enum class ErrorCode {
    // data errors
    IoError,
    MalformedLine,
    MissingColumn,
    DuplicateTime,
    NoRows,
    InvalidSeries,
    // statistical preconditions
    TooShort,
    LengthMismatch,
    ConstantInput,
    ConstantRegressor,
    ConstantSeries,
    DegenerateTime,
    EmptyIntersection,
    OverlapTooShort,
    SampleTooLarge,
    NoEligibleYears,
    InvalidParams,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    bool is_data_error() const noexcept {
        switch (code_) {
            case ErrorCode::IoError:
            case ErrorCode::MalformedLine:
            case ErrorCode::MissingColumn:
            case ErrorCode::DuplicateTime:
            case ErrorCode::NoRows:
            case ErrorCode::InvalidSeries:
                return true;
            default:
                return false;
        }
    }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace trendaudit
