#pragma once

#include <vector>

#include "cusped/triangulation.hpp"

namespace cusped::testsupport {

// All connected triangulations with at most `max_tets` tetrahedra up to combinatorial
// isomorphism, in a fixed deterministic generation order, stopping at `cap` classes.
// Membership requires a clean validate() and no edge class identified with itself in
// reverse (so normal-surface bookkeeping is meaningful on every member).
std::vector<Triangulation> generate_census(int max_tets, int cap);

// Cached variant (generated once per process).
const std::vector<Triangulation>& census_3tet(int cap = 5000);

}  // namespace cusped::testsupport
