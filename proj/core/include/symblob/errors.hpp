#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symblob {

enum class ErrorKind {
    // Input violates a type invariant (CLI exit 3).
    NonSymmetric,
    NotPositiveDefinite,
    NotSymplectic,
    OddDimension,
    NonFinite,
    DimensionMismatch,
    DegeneratePlane,
    // Domain precondition of an operation does not hold (CLI exit 4).
    IndexOutOfRange,
    EmptyIndexSet,
    CapacityMismatch,
    SectionNotBlob,
    DimensionCap,
    InvalidArgument,
    // Numerical failures.
    NoConvergence,
    DegenerateDraw,
    DegenerateSpectrumFailure,
    QuadratureFailure,
    InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace symblob
