#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cusped/homology.hpp"
#include "cusped/skeleton.hpp"
#include "cusped/triangulation.hpp"

namespace cusped {

// Normal coordinates: 7 per tetrahedron, laid out
//   [tri0, tri1, tri2, tri3, quad 01|23, quad 02|13, quad 03|12].
using NormalVector = std::vector<Int>;

constexpr std::array<std::array<int, 2>, 3> kQuadPairs{{{0, 1}, {0, 2}, {0, 3}}};  // pair containing 0
inline std::array<int, 2> quad_other_pair(int q) {
    std::array<int, 2> out{};
    int k = 0;
    for (int v = 1; v < 4; ++v)
        if (v != kQuadPairs[q][1]) out[k++] = v;
    return out;
}

// The quad type whose partition puts a and b in the same pair.
inline int quad_type_pairing(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0) {
        for (int q = 0; q < 3; ++q)
            if (kQuadPairs[q][1] == b) return q;
    }
    // a,b both nonzero: the pair {a,b} is the complement of {0,x}.
    for (int q = 0; q < 3; ++q) {
        auto other = quad_other_pair(q);
        if (other[0] == a && other[1] == b) return q;
    }
    return -1;
}

// Does quad type q in a tetrahedron cross edge {a,b}? (It misses exactly the two pair edges.)
inline bool quad_meets_edge(int q, int a, int b) { return quad_type_pairing(a, b) != q; }

inline size_t tri_coord(int tet, int v) { return 7 * static_cast<size_t>(tet) + v; }
inline size_t quad_coord(int tet, int q) { return 7 * static_cast<size_t>(tet) + 4 + q; }

std::string normal_vector_str(const NormalVector& v);
NormalVector normal_vector_parse(const std::string& text);  // `7t=<n>` prefix then entries

// One row per (internal face pairing, arc type); entries in {-1,0,1} up to cancellation.
IntMatrix matching_matrix(const Triangulation& t);

bool admissible(const Triangulation& t, const NormalVector& v);
bool quad_compatible(const Triangulation& t, const NormalVector& u, const NormalVector& v);
NormalVector haken_sum(const Triangulation& t, const NormalVector& u, const NormalVector& v);

Int weight(const Triangulation& t, const NormalVector& v);
Int euler_char_formula(const Triangulation& t, const NormalVector& v);

NormalVector vertex_link_vector(const Triangulation& t, const Skeleton& sk, int vertex_class);
bool is_vertex_linking(const Triangulation& t, const NormalVector& v);

// Connected-component classification of the realized surface.
struct SurfaceComponentClass {
    long long euler = 0;
    bool orientable = true;
    long long boundary_curves = 0;
    std::string name;  // S2, P2, D2, T2, K2, A2, M2 or a descriptor

    bool operator==(const SurfaceComponentClass&) const = default;
};

struct SurfaceClass {
    std::vector<SurfaceComponentClass> components;
    long long total_euler = 0;
    std::string str() const;
};

std::string surface_name(long long euler, bool orientable, long long boundary_curves);

}  // namespace cusped
