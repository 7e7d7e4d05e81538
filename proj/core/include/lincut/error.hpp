#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lincut {

enum class ErrorCode {
  DegenerateTriangle,
  DegenerateSegment,
  IndexOutOfRange,
  NonManifoldEdge,
  DeadTriangle,
  SegmentThroughVertex,
  SegmentOutsideMesh,
  SegmentCrossesConstraint,
  InconsistentBoundary,
  InvalidPolygon,
  EarQueueExhausted,
  NoEarFound,
  TooFewPoints,
  CollinearPoints,
  DuplicatePoints,
  CrossingSegments,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every exception thrown by the library. `code()` is stable and is
/// what callers (and the CLI exit-code mapping) should branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown by the intersected-triangle walk when the open segment runs
/// exactly through a mesh vertex. Carries the vertex so the caller can split.
class SegmentThroughVertex : public Error {
 public:
  SegmentThroughVertex(std::uint32_t vertex, const std::string& what)
      : Error(ErrorCode::SegmentThroughVertex, what), vertex_(vertex) {}

  std::uint32_t vertex() const noexcept { return vertex_; }

 private:
  std::uint32_t vertex_;
};

}  // namespace lincut
