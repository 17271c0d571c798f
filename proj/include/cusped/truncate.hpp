#pragma once

#include <vector>

#include "cusped/skeleton.hpp"
#include "cusped/triangulation.hpp"

namespace cusped {

// Replaces each listed vertex class by its link: cuts the corner cones off every
// tetrahedron and retriangulates (fan the face polygons, cone each truncated block
// from an interior point). Links of truncated vertices become boundary components.
Triangulation truncate_vertices(const Triangulation& t, const std::vector<int>& vertex_classes);

// Truncates every vertex whose link is neither a sphere nor a disk. Returns the input
// unchanged when it is already material.
Triangulation materialize(const Triangulation& t);

}  // namespace cusped
