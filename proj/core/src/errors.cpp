#include "symblob/errors.hpp"

namespace symblob {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSymmetric: return "NonSymmetric";
        case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorKind::NotSymplectic: return "NotSymplectic";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegeneratePlane: return "DegeneratePlane";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
        case ErrorKind::CapacityMismatch: return "CapacityMismatch";
        case ErrorKind::SectionNotBlob: return "SectionNotBlob";
        case ErrorKind::DimensionCap: return "DimensionCap";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::DegenerateDraw: return "DegenerateDraw";
        case ErrorKind::DegenerateSpectrumFailure: return "DegenerateSpectrumFailure";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

}  // namespace symblob
