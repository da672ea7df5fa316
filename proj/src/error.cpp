#include "tclass/error.hpp"

namespace tclass {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexBelowRange: return "IndexBelowRange";
        case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorCode::WeightsNotConvex: return "WeightsNotConvex";
        case ErrorCode::MismatchedGapIndex: return "MismatchedGapIndex";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::InvalidWeightFamily: return "InvalidWeightFamily";
        case ErrorCode::NotAMember: return "NotAMember";
        case ErrorCode::MissingEta: return "MissingEta";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace tclass
