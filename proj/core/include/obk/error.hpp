#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace obk {

enum class ErrorKind {
  // surface
  DuplicateId,
  DanglingSlot,
  EmptyPresentation,
  NotConnected,
  NotOrientable,
  // patching
  UnknownDisk,
  BandOutsideAttachingRegion,
  InvalidMarking,
  SameHost,
  NotSummable,
  // mapclass
  InvalidCycle,
  CycleNotInSpan,
  SurfaceMismatch,
  BasisEmbeddingMissing,
  // openbook
  ClosedComponent,
  AngleCollision,
  InvalidCriticalPoint,
  // cobordism
  BaseMismatch,
  DegenerateCore,
  CoreOrderViolation,
  InvariantMismatch,
  // embedded
  InvalidChord,
  SkewMismatch,
  NotUnimodular,
  NoCoreCycle,
  DisconnectedSurface,
  // braid
  ParseError,
  IndexOutOfRange,
  NotHomogeneous,
  MissingGenerator,
  // plumbgraph
  UnknownVertex,
  InvalidEdge,
  // arithmetic
  Overflow,
  DimensionMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace obk
