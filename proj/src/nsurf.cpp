#include "cusped/nsurf.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cusped {

std::string normal_vector_str(const NormalVector& v) {
    std::ostringstream os;
    os << "7t=" << v.size();
    for (const auto& x : v) os << ' ' << x;
    return os.str();
}

NormalVector normal_vector_parse(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    if (!(is >> head) || head.rfind("7t=", 0) != 0) throw std::runtime_error("normal vector: expected 7t=<n> prefix");
    size_t n = std::stoull(head.substr(3));
    NormalVector v(n);
    for (size_t i = 0; i < n; ++i) {
        std::string tok;
        if (!(is >> tok)) throw std::runtime_error("normal vector: too few entries");
        v[i] = Int(tok);
    }
    std::string extra;
    if (is >> extra) throw std::runtime_error("normal vector: trailing tokens");
    return v;
}

IntMatrix matching_matrix(const Triangulation& t) {
    IntMatrix m;
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (!g) continue;
            // Each internal face pairing once.
            if (4 * g->tet + g->face < 4 * tet + f) continue;
            if (g->tet == tet && g->face == f) continue;  // self-glued face: no constraint rows
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                // Arc type cutting off v on this face: triangle v plus the quad pairing {v, f}.
                std::vector<Int> row(7 * static_cast<size_t>(t.size()), 0);
                row[tri_coord(tet, v)] += 1;
                row[quad_coord(tet, quad_type_pairing(v, f))] += 1;
                int v2 = g->perm[v];
                row[tri_coord(g->tet, v2)] -= 1;
                row[quad_coord(g->tet, quad_type_pairing(v2, g->face))] -= 1;
                bool zero = true;
                for (const auto& x : row)
                    if (x != 0) zero = false;
                if (!zero) m.push_back(std::move(row));
            }
        }
    }
    return m;
}

bool admissible(const Triangulation& t, const NormalVector& v) {
    if (v.size() != 7 * static_cast<size_t>(t.size())) throw std::runtime_error("normal vector: length mismatch");
    for (const auto& x : v)
        if (x < 0) return false;
    for (int tet = 0; tet < t.size(); ++tet) {
        int quads = 0;
        for (int q = 0; q < 3; ++q)
            if (v[quad_coord(tet, q)] != 0) ++quads;
        if (quads > 1) return false;
    }
    IntMatrix m = matching_matrix(t);
    for (const auto& row : m) {
        Int s = 0;
        for (size_t i = 0; i < row.size(); ++i) s += row[i] * v[i];
        if (s != 0) return false;
    }
    return true;
}

bool quad_compatible(const Triangulation& t, const NormalVector& u, const NormalVector& v) {
    for (int tet = 0; tet < t.size(); ++tet) {
        int qu = -1, qv = -1;
        for (int q = 0; q < 3; ++q) {
            if (u[quad_coord(tet, q)] != 0) qu = q;
            if (v[quad_coord(tet, q)] != 0) qv = q;
        }
        if (qu >= 0 && qv >= 0 && qu != qv) return false;
    }
    return true;
}

NormalVector haken_sum(const Triangulation& t, const NormalVector& u, const NormalVector& v) {
    if (!quad_compatible(t, u, v)) throw std::runtime_error("haken_sum: incompatible quad types");
    NormalVector s(u.size());
    for (size_t i = 0; i < u.size(); ++i) s[i] = u[i] + v[i];
    return s;
}

Int weight(const Triangulation& t, const NormalVector& v) {
    Skeleton sk = make_skeleton(t);
    std::vector<Int> per_class(sk.edge_count, -1);
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int e = 0; e < 6; ++e) {
            int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
            Int w = v[tri_coord(tet, a)] + v[tri_coord(tet, b)];
            for (int q = 0; q < 3; ++q)
                if (quad_meets_edge(q, a, b)) w += v[quad_coord(tet, q)];
            int cls = sk.edge_class[6 * tet + e];
            if (per_class[cls] < 0)
                per_class[cls] = w;
            else if (per_class[cls] != w)
                throw std::runtime_error("weight: inconsistent edge counts (vector not admissible)");
        }
    }
    Int total = 0;
    for (const auto& w : per_class) total += w;
    return total;
}

Int euler_char_formula(const Triangulation& t, const NormalVector& v) {
    // chi = corners - arcs + disks.
    Int disks = 0;
    for (const auto& x : v) disks += x;
    // Arc sides: triangles contribute 3, quads 4; internal-face sides halve, boundary sides count once.
    Int doubled_arcs = 0;
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            bool internal = !t.is_boundary_face(tet, f);
            // Sides on face f: arcs cutting off each vertex v of the face.
            for (int v4 = 0; v4 < 4; ++v4) {
                if (v4 == f) continue;
                Int cnt = v[tri_coord(tet, v4)] + v[quad_coord(tet, quad_type_pairing(v4, f))];
                doubled_arcs += internal ? cnt : 2 * cnt;
            }
        }
    }
    if (doubled_arcs % 2 != 0) throw std::runtime_error("euler_char: arc count parity violation");
    Int arcs = doubled_arcs / 2;
    return weight(t, v) - arcs + disks;
}

NormalVector vertex_link_vector(const Triangulation& t, const Skeleton& sk, int vertex_class) {
    if (vertex_class < 0 || vertex_class >= sk.vertex_count) throw std::runtime_error("vertex_link: unknown class");
    NormalVector v(7 * static_cast<size_t>(t.size()), 0);
    for (int tet = 0; tet < t.size(); ++tet)
        for (int c = 0; c < 4; ++c)
            if (sk.vertex_class[4 * tet + c] == vertex_class) v[tri_coord(tet, c)] += 1;
    return v;
}

bool is_vertex_linking(const Triangulation& t, const NormalVector& v) {
    for (int tet = 0; tet < t.size(); ++tet)
        for (int q = 0; q < 3; ++q)
            if (v[quad_coord(tet, q)] != 0) return false;
    Skeleton sk = make_skeleton(t);
    std::vector<Int> coeff(sk.vertex_count, -1);
    for (int tet = 0; tet < t.size(); ++tet)
        for (int c = 0; c < 4; ++c) {
            int cls = sk.vertex_class[4 * tet + c];
            const Int& x = v[tri_coord(tet, c)];
            if (coeff[cls] < 0)
                coeff[cls] = x;
            else if (coeff[cls] != x)
                return false;
        }
    return true;
}

std::string surface_name(long long euler, bool orientable, long long boundary_curves) {
    bool closed = boundary_curves == 0;
    if (closed && euler == 2) return "S2";
    if (closed && euler == 1) return "P2";
    if (euler == 1 && boundary_curves == 1) return "D2";
    if (closed && euler == 0) return orientable ? "T2" : "K2";
    if (euler == 0 && boundary_curves == 2 && orientable) return "A2";
    if (euler == 0 && boundary_curves == 1 && !orientable) return "M2";
    std::ostringstream os;
    os << (orientable ? "orientable" : "nonorientable") << "(chi=" << euler << ",bdry=" << boundary_curves << ")";
    return os.str();
}

std::string SurfaceClass::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << " + ";
        os << components[i].name;
    }
    if (components.empty()) os << "empty";
    return os.str();
}

}  // namespace cusped
