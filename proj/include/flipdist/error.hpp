#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flipdist {

enum class ErrorKind {
    InstanceInvalid,
    NotATriangulation,
    EdgeNotInTriangulation,
    NotFlippable,
    InstanceMismatch,
    QuadNotInTriangulation,
    SegmentOutsideRegion,
    AlreadyEqual,
    LemmaViolation,
    GraphTooLarge,
    InstanceTooLarge,
    InfeasibleSpec,
    PreconditionFailed,
    ParseError,
    InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and machine-checkable;
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace flipdist
