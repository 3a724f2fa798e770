#include "obk/error.hpp"

namespace obk {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingSlot: return "DanglingSlot";
    case ErrorKind::EmptyPresentation: return "EmptyPresentation";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::UnknownDisk: return "UnknownDisk";
    case ErrorKind::BandOutsideAttachingRegion: return "BandOutsideAttachingRegion";
    case ErrorKind::InvalidMarking: return "InvalidMarking";
    case ErrorKind::SameHost: return "SameHost";
    case ErrorKind::NotSummable: return "NotSummable";
    case ErrorKind::InvalidCycle: return "InvalidCycle";
    case ErrorKind::CycleNotInSpan: return "CycleNotInSpan";
    case ErrorKind::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorKind::BasisEmbeddingMissing: return "BasisEmbeddingMissing";
    case ErrorKind::ClosedComponent: return "ClosedComponent";
    case ErrorKind::AngleCollision: return "AngleCollision";
    case ErrorKind::InvalidCriticalPoint: return "InvalidCriticalPoint";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::DegenerateCore: return "DegenerateCore";
    case ErrorKind::CoreOrderViolation: return "CoreOrderViolation";
    case ErrorKind::InvariantMismatch: return "InvariantMismatch";
    case ErrorKind::InvalidChord: return "InvalidChord";
    case ErrorKind::SkewMismatch: return "SkewMismatch";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NoCoreCycle: return "NoCoreCycle";
    case ErrorKind::DisconnectedSurface: return "DisconnectedSurface";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::MissingGenerator: return "MissingGenerator";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

}  // namespace obk
