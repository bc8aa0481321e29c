#pragma once

// Exact vertex enumeration for low-dimensional polytopes presented as a
// bounding box cut down by halfspaces. Halfspaces are inserted one at a
// time against the current vertex set (double description on the vertex
// side); adjacency is decided by the rank of the shared tight constraints,
// so degenerate vertices are handled exactly.

#include <vector>

#include "slab/rational.hpp"

namespace slab {

// Vertices of {x in [-box, box]^m : A x <= b}, each listed once, in
// lexicographic order. Rows of A must have m entries; box must be positive.
// Returns an empty list when the constraints cut the box down to nothing.
std::vector<std::vector<Rat>> polytope_vertices(
    const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
    const Rat& box, int m);

}  // namespace slab
