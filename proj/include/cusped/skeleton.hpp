#pragma once

#include <optional>
#include <vector>

#include "cusped/triangulation.hpp"

namespace cusped {

// Class partitions of the vertex/edge/face slots of a triangulation under the
// gluing identifications.  Classes are numbered by least slot, slots ordered
// tetrahedron-major.  Edge slots carry an orientation parity relative to the
// class representative (slot direction low-vertex -> high-vertex).
struct LinkInfo {
    int euler = 0;
    bool closed = false;
    bool orientable = true;

    bool is_sphere() const { return closed && euler == 2; }
    bool is_disk() const { return !closed && euler == 1; }
    bool is_torus() const { return closed && orientable && euler == 0; }
};

struct BoundaryComponent {
    int euler = 0;
    bool orientable = true;
    int genus = 0;  // crosscap count when nonorientable
    std::vector<int> vertex_classes;
    int triangle_count = 0;
    int corner_orbits = 0;  // vertices of the boundary surface itself
};

// Combinatorics of the boundary surface: triangles are the boundary face slots, corners
// ordered by ascending vertex label, side s of a triangle omits its corner s.
struct BoundarySurface {
    std::vector<int> faces;          // boundary face slots, ascending
    std::vector<int> index_of_slot;  // 4n -> face index or -1
    struct Side {
        int face = -1, side = -1;  // partner
        int a_img = -1, b_img = -1;  // images of this side's endpoints (ascending) in the partner's tet labels
    };
    std::vector<std::array<Side, 3>> side_partner;
    std::vector<std::array<int, 3>> corner_orbit;
    std::vector<int> orbit_component;
    int orbit_count = 0;

    int local_corner(int face_index, int vertex_label, int face_vertex_opposite) const {
        int k = 0;
        for (int v = 0; v < 4; ++v) {
            if (v == face_vertex_opposite) continue;
            if (v == vertex_label) return k;
            ++k;
        }
        return -1;
    }
};

struct Skeleton {
    int tets = 0;

    std::vector<int> vertex_class;  // slot 4*t+v -> class
    std::vector<int> edge_class;    // slot 6*t+e -> class
    std::vector<int> edge_parity;   // slot orientation vs class representative (0 same, 1 reversed)
    std::vector<int> face_class;    // slot 4*t+f -> class

    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;

    std::vector<int> vertex_rep, edge_rep, face_rep;  // least slot per class

    std::vector<char> vertex_boundary, edge_boundary, face_boundary;
    std::vector<int> edge_degree;
    std::vector<char> edge_reversed;  // edge identified with itself reversing orientation

    std::vector<LinkInfo> vertex_link;

    // Boundary surface data.
    std::vector<BoundaryComponent> boundary;
    std::vector<int> boundary_component_of_face;  // slot 4*t+f -> boundary component, or -1
    BoundarySurface boundary_surface;

    // Euler characteristic of the underlying compact manifold: vertices whose links are
    // neither spheres nor disks count as truncated (their link compensates the cone point).
    int euler_characteristic() const {
        int chi = vertex_count - edge_count + face_count - tets;
        for (const auto& l : vertex_link)
            if (!l.is_sphere() && !l.is_disk()) chi -= 1 - l.euler;
        return chi;
    }

    int euler_characteristic_complex() const { return vertex_count - edge_count + face_count - tets; }

    bool all_edges_valid() const {
        for (char r : edge_reversed)
            if (r) return false;
        return true;
    }

    // Every vertex link a sphere or disk.
    bool is_material() const {
        for (const auto& l : vertex_link)
            if (!l.is_sphere() && !l.is_disk()) return false;
        return true;
    }

    // Every vertex link a torus (the form the angle-structure machinery wants).
    bool is_ideal_torus_links() const {
        if (vertex_link.empty()) return false;
        for (const auto& l : vertex_link)
            if (!l.is_torus()) return false;
        return true;
    }

    int vertex_slot_class(int tet, int v) const { return vertex_class[4 * tet + v]; }
    int edge_slot_class(int tet, int e) const { return edge_class[6 * tet + e]; }
    int face_slot_class(int tet, int f) const { return face_class[4 * tet + f]; }
};

Skeleton make_skeleton(const Triangulation& t);

// No edge class identified with itself in reverse (cheaper than a full skeleton).
bool edges_valid(const Triangulation& t);

int euler_characteristic(const Triangulation& t);

// Consistent per-tetrahedron orientation signs, if the (connected) triangulation is orientable.
std::optional<std::vector<int>> orientation_signs(const Triangulation& t);

}  // namespace cusped
