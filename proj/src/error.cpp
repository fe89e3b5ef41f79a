#include "homposet/error.hpp"

namespace homposet {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroRingExcluded: return "zero ring excluded";
        case ErrorCode::NotPrime: return "not prime";
        case ErrorCode::CapExceeded: return "cap exceeded";
        case ErrorCode::BaseNotField: return "base not a field";
        case ErrorCode::ImproperIdeal: return "improper ideal";
        case ErrorCode::NotAnIdeal: return "not an ideal";
        case ErrorCode::NotASubmonoid: return "not a submonoid";
        case ErrorCode::RingMismatch: return "ring mismatch";
        case ErrorCode::NotCommutative: return "not commutative";
        case ErrorCode::NotAProduct: return "not a product";
        case ErrorCode::NonComposableChain: return "non-composable chain";
        case ErrorCode::NoFactorization: return "no factorization";
        case ErrorCode::InvalidPair: return "invalid pair";
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::ParseError: return "parse error";
        case ErrorCode::Internal: return "internal error";
    }
    return "unknown error";
}

}  // namespace homposet
