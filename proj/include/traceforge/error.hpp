#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace traceforge {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    NotCofinite,
    EmptyGenerators,
    NotAMember,
    BoundTooLarge,
    ZeroIdeal,
    ZeroDivisor,
    NotIntegral,
    NotClosed,
    WorkloadExceeded,
    NotMinimalMultiplicity,
    IsDVR,
    PreconditionViolated,
    ZeroQuotient,
    InfiniteField,
    NotGorenstein,
    DependentGenerators,
    InvalidAlgebra,
    InvalidArgument,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::WorkloadExceeded: return "WorkloadExceeded";
    case ErrorCode::NotMinimalMultiplicity: return "NotMinimalMultiplicity";
    case ErrorCode::IsDVR: return "IsDVR";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ZeroQuotient: return "ZeroQuotient";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::NotGorenstein: return "NotGorenstein";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace traceforge
