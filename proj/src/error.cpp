#include "addact/error.hpp"

namespace addact {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegreeBlowup: return "DEGREE_BLOWUP";
        case ErrorCode::NotFiniteCodimension: return "NOT_FINITE_CODIMENSION";
        case ErrorCode::NotSupportedAtOrigin: return "NOT_SUPPORTED_AT_ORIGIN";
        case ErrorCode::IrrationalSplitting: return "IRRATIONAL_SPLITTING";
        case ErrorCode::NotLocal: return "NOT_LOCAL";
        case ErrorCode::NotNilpotent: return "NOT_NILPOTENT";
        case ErrorCode::NotCommuting: return "NOT_COMMUTING";
        case ErrorCode::DegenerateInput: return "DEGENERATE_INPUT";
        case ErrorCode::NotQuadratic: return "NOT_QUADRATIC";
        case ErrorCode::MalformedFan: return "MALFORMED_FAN";
        case ErrorCode::NotComplete: return "NOT_COMPLETE";
        case ErrorCode::NotSurface: return "NOT_SURFACE";
        case ErrorCode::NoAdditiveAction: return "NO_ADDITIVE_ACTION";
        case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
        case ErrorCode::InvalidWeights: return "INVALID_WEIGHTS";
        case ErrorCode::UnknownFixture: return "UNKNOWN_FIXTURE";
        case ErrorCode::NotFullDimensional: return "NOT_FULL_DIMENSIONAL";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "INTERNAL";
}

}  // namespace addact
