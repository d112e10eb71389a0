#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elim {

enum class ErrorCode {
    ArityMismatch,
    LengthMismatch,
    IndexOutOfRange,
    NotSquare,
    SyntaxError,
    VariableOutOfRange,
    NotHomogeneous,
    WrongArity,
    InvalidSystem,
    BadPermutation,
    FaceMismatch,
    ChiMismatch,
    ChiUndefined,
    NotZeroDimensional,
    DegenerateMinor,
    PoissonPreconditionFailed,
    CrosscheckMismatch,
    BothPathsDegenerate,
    UnassignedMonomial,
    BadInput,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

// Input errors come from malformed or out-of-contract input and map to
// process exit code 2; everything else is a typed computation error (exit 1).
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

    Error(ErrorCode code, const std::string& message,
          std::size_t position = no_position)
        : std::runtime_error(message), code_(code), position_(position) {}

    ErrorCode code() const { return code_; }
    std::size_t position() const { return position_; }

private:
    ErrorCode code_;
    std::size_t position_;
};

} // namespace elim
