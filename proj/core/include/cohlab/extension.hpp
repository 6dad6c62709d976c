#pragma once

#include <utility>
#include <vector>

#include "cohlab/labelling.hpp"
#include "cohlab/polyhedron.hpp"

namespace cohlab {

struct PyramidExtensionTrace {
  FaceId face = -1;
  VertexId apex = -1;
  std::vector<Rat> base_labels;  // a_1..a_n in cyclic order, a_1 minimal
  std::vector<Rat> apex_labels;  // b_12, b_23, ..., b_n1
};

struct Extended {
  Polyhedron poly;
  Labelling labels;
  PyramidExtensionTrace trace;
};

// Erects a pyramid over one face of an arbitrarily labelled polyhedron
// (coherence of the input is not required; labels only need to be distinct).
// Apex-edge labels follow the inductive rule: walk the face from its minimum
// label; on an ascent pick just above a_i, on a descent dive back into the
// low zone under every previous apex label, and close above max(a_n, b_12).
// Every old face is untouched, every new triangle reads one descent.
Extended attach_pyramid_to_face(const Polyhedron& p, const Labelling& l, FaceId face);

// Pyramid over every original face, then normalize. The output is coherent
// and restricts to the input order on the original edges.
std::pair<Polyhedron, Labelling> pyramidalize(const Polyhedron& p, const Labelling& l);

// Chops vertex v off a vertex-coherent polyhedron: realized as
// dual -> attach_pyramid_to_face at the face of v -> dual back, transporting
// labels through the edge bijections. Surviving edges keep their values.
std::pair<Polyhedron, Labelling> truncate_vertex(const Polyhedron& p, const Labelling& l, VertexId v);

// Chops every vertex (dual -> pyramidalize -> dual back). Output is
// vertex-coherent from an arbitrary distinct labelling.
std::pair<Polyhedron, Labelling> truncate_all(const Polyhedron& p, const Labelling& l);

}  // namespace cohlab
