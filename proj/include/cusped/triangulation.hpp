#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cusped/perm4.hpp"

namespace cusped {

// Face f of a tetrahedron is the face opposite vertex f.
// Edge e (0..5) of a tetrahedron joins the vertex pair edge_vertices(e).

struct Gluing {
    int tet = -1;
    int face = -1;
    Perm4 perm;  // maps vertex labels of this tet to vertex labels of the adjacent tet; perm[face] == adjacent face

    bool operator==(const Gluing&) const = default;
};

constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline int edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < 6; ++e)
        if (kEdgeVertices[e][0] == u && kEdgeVertices[e][1] == v) return e;
    return -1;
}

struct Diagnostic {
    int tet = -1;
    int face = -1;
    std::string message;
};

class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(int tet_count) : glue_(tet_count) {}

    int size() const { return static_cast<int>(glue_.size()); }
    bool empty() const { return glue_.empty(); }

    const std::optional<Gluing>& gluing(int tet, int face) const { return glue_[tet][face]; }
    bool is_boundary_face(int tet, int face) const { return !glue_[tet][face].has_value(); }

    // Installs the gluing and its inverse entry. Overwrites nothing: both slots must be free.
    void join(int tet, int face, int dst_tet, int dst_face, const Perm4& perm);
    void unjoin(int tet, int face);

    int add_tetrahedron() {
        glue_.emplace_back();
        return size() - 1;
    }

    std::vector<Diagnostic> validate() const;
    bool is_valid() const { return validate().empty(); }

    bool is_connected() const;
    bool is_closed() const;
    int boundary_face_count() const;

    // Connected components as sub-triangulations (tets renumbered in ascending order).
    std::vector<Triangulation> components() const;

    // Relabel: tet t of the result is old tet tet_order[t]... here: new_index[old_tet] gives the
    // position of each old tet, and corner_perm[old_tet] maps old vertex labels to new ones.
    Triangulation relabel(const std::vector<int>& new_index, const std::vector<Perm4>& corner_perm) const;

    bool operator==(const Triangulation&) const = default;

    std::string gluing_table() const;
    static Triangulation from_gluing_table(const std::string& text);

private:
    std::vector<std::array<std::optional<Gluing>, 4>> glue_;
};

}  // namespace cusped
