#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cohlab/labelling.hpp"
#include "cohlab/polyhedron.hpp"

namespace cohlab {

// One chosen start of the increasing rotation per face. A selection is
// feasible iff the union of the per-face chains a_1 < ... < a_n, read as arcs
// on edge ids, is acyclic.
struct RotationSelection {
  std::vector<int> start;  // per face, in [0, n_F)
};

enum class SolveStatus { feasible, infeasible };

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<Labelling> witness;               // canonical; passes is_coherent
  std::optional<std::uint64_t> count;
  std::uint64_t nodes_explored = 0;               // assignments tried, or selections tested
  std::optional<RotationSelection> selection;
};

// Exhaustive value assignment: edges in id order, values 1..E ascending, a
// branch dies as soon as some face shows >= 2 descents among its assigned
// adjacent pairs or a fully assigned face shows != 1. The witness is the
// first (hence lexicographically least) complete assignment.
SolveResult solve_backtracking(const Polyhedron& p);

// Same search run to exhaustion. Guarded: throws TooLarge when E > edge_cap.
std::uint64_t count_labellings(const Polyhedron& p, int edge_cap = 14);

// All canonical coherent labellings with label 1 on `edge`, in lexicographic
// order of the label vector.
std::vector<Labelling> enumerate_with_fixed_minimum(const Polyhedron& p, EdgeId edge);

struct RotationOptions {
  // Pin one face to one rotation start and iterate only the completions.
  std::optional<std::pair<FaceId, int>> pin;
  std::uint64_t selection_cap = 10'000'000;  // on the number of iterated selections
};

// Iterates rotation selections in mixed-radix order (faces by id, last face
// fastest), testing each induced digraph for acyclicity. On the first acyclic
// selection the witness ranks a topological order (smallest edge id first)
// as 1..E. nodes_explored counts selections tested.
SolveResult solve_by_rotation_selection(const Polyhedron& p, const RotationOptions& opts = {});

// Exact number of linear extensions of a strict partial order given as arcs
// on n <= 20 elements; downset DP over bitmasks. Throws CyclicInput on a
// cyclic relation, TooLarge for n > 20.
std::uint64_t count_linear_extensions(int n, std::span<const std::pair<int, int>> arcs);

// Sum of linear-extension counts over all acyclic rotation selections; equals
// count_labellings because the selections partition the coherent labellings
// by descent position.
std::uint64_t count_by_rotation_selection(const Polyhedron& p, const RotationOptions& opts = {});

}  // namespace cohlab
