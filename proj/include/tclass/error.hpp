#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tclass {

enum class ErrorCode {
    IndexBelowRange,
    NegativeCoefficient,
    WeightsNotConvex,
    MismatchedGapIndex,
    ParameterOutOfRange,
    InvalidWeightFamily,
    NotAMember,
    MissingEta,
    EmptyGrid,
    InvalidInput,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type; code() is the
// machine-readable part surfaced by the CLI.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tclass
