#include "cohlab/error.hpp"

namespace cohlab {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::NonManifold: return "NonManifold";
    case Errc::NotSphere: return "NotSphere";
    case Errc::DegenerateFace: return "DegenerateFace";
    case Errc::LowDegreeVertex: return "LowDegreeVertex";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::MissingLabel: return "MissingLabel";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::TooLarge: return "TooLarge";
    case Errc::CyclicInput: return "CyclicInput";
    case Errc::NotTriangle: return "NotTriangle";
    case Errc::NotTriangles: return "NotTriangles";
    case Errc::NotCoherent: return "NotCoherent";
    case Errc::NotVertexCoherent: return "NotVertexCoherent";
    case Errc::PreconditionZBY: return "PreconditionZBY";
    case Errc::VertexDegreeNot3: return "VertexDegreeNot3";
    case Errc::VertexNotOnFace: return "VertexNotOnFace";
    case Errc::NeighborTooSmall: return "NeighborTooSmall";
    case Errc::FacesDontShareEdge: return "FacesDontShareEdge";
    case Errc::NoFeasibleGap: return "NoFeasibleGap";
    case Errc::InvalidN: return "InvalidN";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::Overflow: return "Overflow";
  }
  return "UnknownError";
}

}  // namespace cohlab
