#pragma once

#include <span>
#include <vector>

#include "cohlab/polyhedron.hpp"
#include "cohlab/rational.hpp"

namespace cohlab {

// Edge id -> label. A labelling is canonical when its values are exactly
// {1..E}; constructions that insert fractional labels reduce to canonical
// form through normalize() without changing any order relation.
using Labelling = std::vector<Rat>;

struct DescentProfile {
  int count = 0;
  std::vector<int> positions;  // cyclic positions i with seq[i] > seq[i+1]
};

// Number of cyclic positions i with seq[i] > seq[(i+1) % n]. A cycle of
// distinct labels admits a strictly increasing rotation iff this is 1.
int cyclic_descent_count(std::span<const Rat> seq);
DescentProfile descent_profile(std::span<const Rat> seq);

struct CoherenceReport {
  bool coherent = false;
  std::vector<DescentProfile> per_item;  // per face (or per vertex)
  std::vector<int> offending;           // ids with descent count != 1

  explicit operator bool() const noexcept { return coherent; }
};

// Throws MissingLabel when l does not label every edge of p, DuplicateLabel
// when two labels coincide.
void validate_labels(const Polyhedron& p, const Labelling& l);

// Face-coherence: every oriented face reads as exactly one cyclic descent.
CoherenceReport is_coherent(const Polyhedron& p, const Labelling& l);

// Vertex-coherence: the same criterion on every vertex star.
CoherenceReport is_vertex_coherent(const Polyhedron& p, const Labelling& l);

bool is_canonical(const Labelling& l);

// Rank map onto {1..E}; preserves all order relations, idempotent on
// canonical input.
Labelling normalize(const Labelling& l);

// k -> (k mod E) + 1 on a canonical labelling; throws NotCanonical otherwise.
Labelling cyclic_shift(const Labelling& l);

std::vector<Rat> face_label_cycle(const Polyhedron& p, const Labelling& l, FaceId f);
std::vector<Rat> vertex_label_cycle(const Polyhedron& p, const Labelling& l, VertexId v);

}  // namespace cohlab
