#pragma once

#include <stdexcept>
#include <string>

namespace addact {

// Every recoverable domain failure carries one of these codes.  Code names
// are part of the CLI contract: they appear verbatim in error output.
enum class ErrorCode {
    DegreeBlowup,
    NotFiniteCodimension,
    NotSupportedAtOrigin,
    IrrationalSplitting,
    NotLocal,
    NotNilpotent,
    NotCommuting,
    DegenerateInput,
    NotQuadratic,
    MalformedFan,
    NotComplete,
    NotSurface,
    NoAdditiveAction,
    NotApplicable,
    InvalidWeights,
    UnknownFixture,
    NotFullDimensional,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class AddactError : public std::runtime_error {
public:
    AddactError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
    throw AddactError(code, detail);
}

}  // namespace addact
