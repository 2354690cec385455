#pragma once

#include <stdexcept>
#include <string>

namespace oddgon {

enum class ErrorCode {
    InvalidArgument,
    UnsupportedSurface,
    CornerHit,
    InvalidPath,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised when a straight path passes within the corner tolerance of a cone point.
class CornerHit : public Error {
public:
    explicit CornerHit(const std::string& what) : Error(ErrorCode::CornerHit, what) {}
};

} // namespace oddgon
