#pragma once

#include <stdexcept>
#include <string>

namespace cohlab {

// Every failure mode the library reports. The CLI prints the enum name, so
// names are part of the machine-readable surface.
enum class Errc {
  NonManifold,
  NotSphere,
  DegenerateFace,
  LowDegreeVertex,
  UnknownVertex,
  UnknownEdge,
  UnknownFace,
  DuplicateLabel,
  MissingLabel,
  NotCanonical,
  TooLarge,
  CyclicInput,
  NotTriangle,
  NotTriangles,
  NotCoherent,
  NotVertexCoherent,
  PreconditionZBY,
  VertexDegreeNot3,
  VertexNotOnFace,
  NeighborTooSmall,
  FacesDontShareEdge,
  NoFeasibleGap,
  InvalidN,
  SyntaxError,
  SchemaError,
  Overflow,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace cohlab
