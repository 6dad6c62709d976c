#pragma once

#include <array>
#include <utility>

#include "cohlab/labelling.hpp"
#include "cohlab/polyhedron.hpp"

namespace cohlab {

// Tetrahedron with the classic symbol layout: opposite (vertex-disjoint)
// edge pairs are (x1,x4), (x2,x5), (x3,x6) and the four oriented faces read
// (x1 x2 x3), (x2 x6 x4), (x3 x4 x5), (x1 x5 x6) through the symbol map.
struct TetrahedronLayout {
  Polyhedron poly;
  std::array<EdgeId, 6> symbol_edges;  // symbol_edges[i] = edge id of x_{i+1}
  std::array<FaceId, 4> face_ids;      // the four faces in the order above
};

TetrahedronLayout tetrahedron();

// Pyramid over an n-gon (V = n+1, E = 2n, F = n+1) carrying the standard
// coherent labelling: base cycle 3 < 4 < (n+3) < ... < 2n, apex faces
// 3<(n+1)<(n+2), 1<4<(n+2), 1<2<(n+3), 2<5<(n+4) and k<(k+1)<(n+k) onward.
// n = 3 is a tetrahedron and uses an explicit checker-validated instance,
// since the general formulas collide there.
std::pair<Polyhedron, Labelling> pyramid(int n);

// Combinatorial cube whose twelve edges x1..x12 sit so that the six oriented
// faces read F1:(x1,x2,x3,x4), F2:(x5,x6,x7,x2), F3:(x11,x10,x8,x6),
// F4:(x12,x4,x9,x10), F5:(x3,x7,x8,x9), F6:(x1,x12,x11,x5).
struct CuboidLayout {
  Polyhedron poly;
  std::array<EdgeId, 12> symbol_edges;  // symbol_edges[i] = edge id of x_{i+1}
  std::array<FaceId, 6> face_ids;       // F1..F6
};

CuboidLayout cuboid_layout();
Polyhedron cuboid();

// n-gonal prism combinatorics, V = 2n, E = 3n, F = n+2. No labelling.
Polyhedron prism(int n);

// Bipyramid over an n-gon (V = n+2, E = 3n, F = 2n): pyramid(n) with a second
// pyramid erected over the base face, then normalized.
std::pair<Polyhedron, Labelling> bipyramid(int n);

}  // namespace cohlab
