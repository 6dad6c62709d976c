#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohlab/error.hpp"

namespace cohlab {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

// An abstract oriented 2-sphere: faces are cyclic vertex sequences, all
// consistently oriented (each edge is traversed once in each direction).
// Edges and vertex rotations are derived, never stored independently; edge
// ids are assigned by sorting the (min,max) vertex pairs, so they are stable
// across runs and serializations.
//
// Instances are immutable after build_from_faces and safe to share across
// threads; every operation below is a pure function.
struct Polyhedron {
  int vertex_count = 0;
  std::vector<std::vector<VertexId>> faces;

  // Derived incidence data.
  std::vector<std::pair<VertexId, VertexId>> edges;   // id -> (min,max)
  std::vector<std::vector<EdgeId>> face_edges;        // face -> edge ids in cycle order
  std::vector<std::array<FaceId, 2>> edge_faces;      // edge -> {face with dart (min->max), face with dart (max->min)}
  std::vector<std::vector<EdgeId>> vertex_rotations;  // vertex -> edge rotation, starts at lowest edge id
  std::vector<std::vector<FaceId>> rotation_faces;    // vertex -> face between rotation edges i and i+1

  int edge_count() const noexcept { return static_cast<int>(edges.size()); }
  int face_count() const noexcept { return static_cast<int>(faces.size()); }

  // -1 when the two vertices are not joined.
  EdgeId find_edge(VertexId a, VertexId b) const noexcept;
  EdgeId edge_between(VertexId a, VertexId b) const;  // throws UnknownEdge
  int degree(VertexId v) const;

  // The face on the other side of edge e from face f.
  FaceId neighbor_across(FaceId f, EdgeId e) const;
};

// Validates and derives everything. Errors: DegenerateFace (length < 3 or a
// repeated vertex), UnknownVertex (negative id), NonManifold (an edge in != 2
// faces or traversed twice in the same direction, or a pinched vertex),
// LowDegreeVertex (< 3), NotSphere (disconnected or V - E + F != 2).
Polyhedron build_from_faces(std::vector<std::vector<VertexId>> face_cycles);

// Rotation of edges around v induced by the face orientations, starting at
// the lowest-id incident edge.
std::vector<EdgeId> vertex_star(const Polyhedron& p, VertexId v);

struct DualCorrespondence {
  Polyhedron dual;
  std::vector<EdgeId> edge_bijection;  // primal edge id -> dual edge id
};

// Abstract dual: one dual vertex per face (dual vertex id = face id), one
// dual face per vertex (dual face id = vertex id, its cycle is the vertex
// rotation's face sequence). The bijection pairs each primal edge with the
// dual edge joining its two incident faces.
DualCorrespondence dual(const Polyhedron& p);

// Face whose vertex set equals `verts` (any rotation, exact set match).
FaceId face_with_vertices(const Polyhedron& p, std::span<const VertexId> verts);

// Face whose vertex cycle equals `cycle` up to rotation (orientation kept).
FaceId face_with_cycle(const Polyhedron& p, std::span<const VertexId> cycle);

// Canonical form of the oriented map; two polyhedra are combinatorially
// isomorphic (orientation preserved) iff their canonical forms compare equal.
std::string canonical_form(const Polyhedron& p);
bool isomorphic(const Polyhedron& a, const Polyhedron& b);

}  // namespace cohlab
