#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homposet {

enum class ErrorCode {
    ZeroRingExcluded,
    NotPrime,
    CapExceeded,
    BaseNotField,
    ImproperIdeal,
    NotAnIdeal,
    NotASubmonoid,
    RingMismatch,
    NotCommutative,
    NotAProduct,
    NonComposableChain,
    NoFactorization,
    InvalidPair,
    InvalidArgument,
    ParseError,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Size caps for table storage and morphism search.
struct Limits {
    std::size_t table_cap = 64;
    std::size_t search_cap = 32;
};

}  // namespace homposet
