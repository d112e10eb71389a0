#include "elim/error.hpp"

namespace elim {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::WrongArity: return "WrongArity";
        case ErrorCode::InvalidSystem: return "InvalidSystem";
        case ErrorCode::BadPermutation: return "BadPermutation";
        case ErrorCode::FaceMismatch: return "FaceMismatch";
        case ErrorCode::ChiMismatch: return "ChiMismatch";
        case ErrorCode::ChiUndefined: return "ChiUndefined";
        case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
        case ErrorCode::DegenerateMinor: return "DegenerateMinor";
        case ErrorCode::PoissonPreconditionFailed:
            return "PoissonPreconditionFailed";
        case ErrorCode::CrosscheckMismatch: return "CrosscheckMismatch";
        case ErrorCode::BothPathsDegenerate: return "BothPathsDegenerate";
        case ErrorCode::UnassignedMonomial: return "UnassignedMonomial";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotZeroDimensional:
        case ErrorCode::DegenerateMinor:
        case ErrorCode::PoissonPreconditionFailed:
        case ErrorCode::CrosscheckMismatch:
        case ErrorCode::BothPathsDegenerate:
        case ErrorCode::ChiMismatch:
        case ErrorCode::ChiUndefined:
        case ErrorCode::UnassignedMonomial:
            return false;
        default:
            return true;
    }
}

}  // namespace elim
