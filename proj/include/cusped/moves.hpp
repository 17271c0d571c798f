#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusped/skeleton.hpp"
#include "cusped/triangulation.hpp"

namespace cusped {

struct MoveResult {
    Triangulation tri;
    // For each face slot 4*t+f of the result: the face slot of the input it descends from,
    // or -1. Boundary provenance only; internal faces may carry -1.
    std::vector<int> face_origin;
    int created_edge_slot = -1;  // pachner23: slot 6*t+e of the new central edge
};

enum class MoveKind { Fold, Layer, Pachner23, Pachner32 };

std::string move_kind_name(MoveKind k);
std::optional<MoveKind> move_kind_from_name(const std::string& s);

// Class-level moves; locations refer to the skeleton numbering of the given triangulation.
std::optional<MoveResult> pachner_23(const Triangulation& t, int face_class);
std::optional<MoveResult> pachner_32(const Triangulation& t, int edge_class);
std::optional<MoveResult> close_book(const Triangulation& t, int edge_class);
std::optional<MoveResult> layer_on_edge(const Triangulation& t, int edge_class);

// Simplification-only moves (not part of the proof vocabulary).
std::optional<MoveResult> shell_tetrahedron(const Triangulation& t, int tet);
std::optional<MoveResult> two_zero_edge(const Triangulation& t, int edge_class);

std::optional<MoveResult> apply_move(const Triangulation& t, MoveKind kind, int location);

// Both boundary triangles adjacent to a boundary edge class, with matched endpoint labels:
// walking across the boundary from side A, vertex a maps to a2 and b to b2.
struct BoundaryEdgeSides {
    int tet_a, face_a, a1, b1;
    int tet_b, face_b, a2, b2;
};
std::optional<BoundaryEdgeSides> boundary_sides_of_edge(const Triangulation& t, const Skeleton& sk, int edge_class);

// Shared flattening helper: delete `dead` tetrahedra, identifying faces of dead tetrahedra in
// pairs as instructed, and re-route gluings of surviving tetrahedra through the chains.
// Each identification names two face slots of dead tetrahedra plus the label correspondence.
struct FaceIdent {
    int tet_a, face_a;
    int tet_b, face_b;
    Perm4 perm;  // labels of tet_a -> labels of tet_b, perm[face_a] == face_b
};
struct FlattenResult {
    Triangulation tri;
    std::vector<int> tet_map;     // old tet -> new tet index, or -1 if removed
    std::vector<int> face_origin; // as in MoveResult
    bool valid = true;
    std::string error;
};
// When allow_lost_regions is false, every identified dead face must be consumed by a chain
// that starts at a surviving face; identification cycles (regions silently collapsed away)
// make the result invalid.
FlattenResult flatten_and_remove(const Triangulation& t, const std::vector<char>& dead,
                                 const std::vector<FaceIdent>& idents, bool allow_lost_regions);

}  // namespace cusped
