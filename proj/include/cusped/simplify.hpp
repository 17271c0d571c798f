#pragma once

#include <optional>
#include <vector>

#include "cusped/isosig.hpp"
#include "cusped/triangulation.hpp"

namespace cusped {

// A triangulation whose boundary faces carry integer tags, preserved through moves.
struct TaggedTriangulation {
    Triangulation tri;
    std::vector<int> face_tag;  // size 4*n; -1 on internal faces

    static TaggedTriangulation from_boundary_components(const Triangulation& t);
};

struct CloseCuspsResult {
    Triangulation tri;
    SimplificationProof proof;
    int tetrahedra_added = 0;
};

// Folds and layers until every boundary component has exactly one vertex class.
// The returned proof verifies against (input, output).
CloseCuspsResult close_cusps(const Triangulation& t);

// Homeomorphism-preserving greedy reduction: 3-2 moves, 2-0 edge moves and boundary
// shellings, with a bounded deterministic 2-3 escape walk.
Triangulation simplify_greedy(const Triangulation& t, int sideways_budget = 24);
TaggedTriangulation simplify_greedy_tagged(const TaggedTriangulation& t, int sideways_budget = 24);

// Greedy recognition of a triangulated 3-ball: boundary must be one sphere; the
// triangulation is shrunk and accepted only if it reaches a one-tetrahedron ball form.
bool greedy_ball_check(const Triangulation& t, int sideways_budget = 24);

}  // namespace cusped
