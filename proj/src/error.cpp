#include "btfp/error.hpp"

namespace btfp {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::ZeroModulus: return "ZeroModulus";
        case ErrorCode::ZeroOrConstant: return "ZeroOrConstant";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::RootAtZero: return "RootAtZero";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::SeedLengthMismatch: return "SeedLengthMismatch";
        case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case ErrorCode::DenseTooLarge: return "DenseTooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotFoundWithinBound: return "NotFoundWithinBound";
        case ErrorCode::BadBand: return "BadBand";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace btfp
