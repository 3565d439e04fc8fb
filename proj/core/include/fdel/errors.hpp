#pragma once

#include <stdexcept>
#include <string>

namespace fdel {

enum class ErrorCode {
    ParseError,
    InvalidArgument,
    BoundaryMismatch,
    EmptyFamily,
    DisconnectedMember,
    NoPlanarMember,
    ResourceLimit,
    InfeasibleSolution,
    MissingProfile,
    IoError,
    Internal,
};

/// All library errors carry a code so callers can dispatch without
/// string matching (the CLI maps codes to exit statuses).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::DisconnectedMember: return "DisconnectedMember";
    case ErrorCode::NoPlanarMember: return "NoPlanarMember";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InfeasibleSolution: return "InfeasibleSolution";
    case ErrorCode::MissingProfile: return "MissingProfile";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace fdel
