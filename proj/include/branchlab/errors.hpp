#pragma once

#include <stdexcept>
#include <string>

namespace branchlab {

enum class ErrorKind {
    NotFiniteType,
    NotIntegral,
    NotDominant,
    ResourceLimit,
    IdentityViolation,
    StructureViolation,
    NotInvolution,
    NotMaximallySplit,
    InconsistentSigns,
    NormalizationFailure,
    CartanSearchFailure,
    InvalidLabel,
    InvalidArgument,
    ParseError,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotMaximallySplit: return "NotMaximallySplit";
    case ErrorKind::InconsistentSigns: return "InconsistentSigns";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::CartanSearchFailure: return "CartanSearchFailure";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace branchlab
