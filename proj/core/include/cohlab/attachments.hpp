#pragma once

#include <optional>

#include "cohlab/labelling.hpp"
#include "cohlab/polyhedron.hpp"

namespace cohlab {

// The five coherence-preserving tetrahedron attachments. Each consumes a
// coherent labelled polyhedron and produces a strictly larger (or equal-size,
// for A3) coherent labelled one; freshly inserted labels are rationals chosen
// inside the documented open intervals (midpoint defaults, displaced only on
// collision with an existing label).
//
// Vertex ids in the result: surviving vertices keep their relative order and
// are compacted to 0..V'-2; a newly added apex always becomes the last id.

enum class AttachMode { A1, A2, A3, A4, A5 };

struct AttachmentSpec {
  AttachMode mode;
  FaceId face1 = -1;
  FaceId face2 = -1;    // A5 only
  EdgeId edge = -1;     // A2: the vanished edge; A5: the shared edge
  VertexId vertex = -1; // A3: the vanished vertex
  std::optional<Rat> d, e, f;
  int cyclic_shifts = 0;  // A2: shifts applied to reach z < b < y
};

struct Attached {
  Polyhedron poly;
  Labelling labels;
  AttachmentSpec spec;
};

// One face identified, no edge vanishes. The face must be a triangle with
// increasing rotation a < b < c; new labels satisfy f < a < e < b < c < d.
Attached attach_a1(const Polyhedron& p, const Labelling& l, FaceId face);

// One face identified, edge b vanishes. The neighbour across b must read
// z < b < y (its cyclic neighbours), possibly after cyclic shifts of a
// canonical labelling; throws PreconditionZBY when no shift achieves it.
Attached attach_a2(const Polyhedron& p, const Labelling& l, FaceId face, EdgeId b);

// One face identified, the two face edges at v vanish together with v, whose
// degree must be 3; the third edge extends to the apex and no label value is
// created or destroyed.
Attached attach_a3(const Polyhedron& p, const Labelling& l, FaceId face, VertexId v);

// Capping off a triangle: all three vertices (degree 3) vanish with the three
// edges and the face; the outward edges keep their labels and meet at the new
// apex. Each neighbour face must have >= 4 edges.
Attached cap_triangle(const Polyhedron& p, const Labelling& l, FaceId face);

// Two faces identified, their common edge vanishes and the opposite edge of
// the glued tetrahedron gets a label found by scanning label gaps.
Attached attach_a5(const Polyhedron& p, const Labelling& l, FaceId face1, FaceId face2);

}  // namespace cohlab
