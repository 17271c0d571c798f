#pragma once

// Brute-force reference computations used only by tests. These must stay independent of
// the library's enumeration path: everything here works by direct lattice search and
// exact rank computations.

#include <vector>

#include "cusped/homology.hpp"
#include "cusped/triangulation.hpp"

namespace cusped::testsupport {

using cusped::Int;

// All admissible lattice solutions of the matching equations with every entry <= box,
// excluding zero, in lexicographic order.
std::vector<std::vector<Int>> admissible_solutions_in_box(const Triangulation& t, const Int& box);

// Extreme-ray oracle: admissible solutions in the box that are primitive and whose zero-set
// pins down a one-dimensional solution space (exact rank test over the support).
std::vector<std::vector<Int>> brute_force_vertex_rays(const Triangulation& t, const Int& box);

// Minimal-generator oracle: admissible solutions in the box with no admissible proper
// decomposition.
std::vector<std::vector<Int>> brute_force_fundamental(const Triangulation& t, const Int& box);

}  // namespace cusped::testsupport
