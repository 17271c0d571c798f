#include "cusped/skeleton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cusped {

namespace {

// Union-find with an orientation bit on the edge to the parent.
struct ParityUF {
    std::vector<int> parent;
    std::vector<int> parity;  // parity of path to parent
    std::vector<char> conflict;

    explicit ParityUF(int n) : parent(n), parity(n, 0), conflict(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        parity[x] ^= p;
        return {r, parity[x]};
    }

    void unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != rel) conflict[ra] = 1;
            return;
        }
        if (ra > rb) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent[rb] = ra;
        parity[rb] = pa ^ pb ^ rel;
        conflict[ra] |= conflict[rb];
    }
};

struct PlainUF {
    std::vector<int> parent;
    explicit PlainUF(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

// Renumber union-find roots by least member slot; returns class count.
int number_classes(PlainUF& uf, std::vector<int>& cls, std::vector<int>& rep) {
    int n = static_cast<int>(cls.size());
    std::map<int, int> root_to_class;
    rep.clear();
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        auto it = root_to_class.find(r);
        if (it == root_to_class.end()) {
            int c = static_cast<int>(rep.size());
            root_to_class.emplace(r, c);
            rep.push_back(i);
            cls[i] = c;
        } else {
            cls[i] = it->second;
        }
    }
    return static_cast<int>(rep.size());
}

// Classify a surface given as triangles with matched sides.
// sides: for each (triangle, side) the partner (triangle, side) or -1, plus a corner
// correspondence bit. Used for both vertex links and boundary surfaces.
struct SurfacePiece {
    int euler = 0;
    bool closed = true;
    bool orientable = true;
};

}  // namespace

Skeleton make_skeleton(const Triangulation& tri) {
    Skeleton sk;
    sk.tets = tri.size();
    int n = tri.size();

    PlainUF vuf(4 * n), fuf(4 * n);
    ParityUF euf(6 * n);

    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            fuf.unite(4 * t + f, 4 * g->tet + g->face);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                vuf.unite(4 * t + v, 4 * g->tet + g->perm[v]);
            }
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
                if (a == f || b == f) continue;
                int pa = g->perm[a], pb = g->perm[b];
                int e2 = edge_index(pa, pb);
                int rel = (pa > pb) ? 1 : 0;
                euf.unite(6 * t + e, 6 * g->tet + e2, rel);
            }
        }
    }

    sk.vertex_class.assign(4 * n, 0);
    sk.face_class.assign(4 * n, 0);
    sk.vertex_count = number_classes(vuf, sk.vertex_class, sk.vertex_rep);
    sk.face_count = number_classes(fuf, sk.face_class, sk.face_rep);

    // Edge classes with parity.
    {
        std::map<int, int> root_to_class;
        sk.edge_class.assign(6 * n, 0);
        sk.edge_parity.assign(6 * n, 0);
        sk.edge_rep.clear();
        std::vector<int> root_conflict;
        for (int i = 0; i < 6 * n; ++i) {
            auto [r, p] = euf.find(i);
            auto it = root_to_class.find(r);
            int c;
            if (it == root_to_class.end()) {
                c = static_cast<int>(sk.edge_rep.size());
                root_to_class.emplace(r, c);
                sk.edge_rep.push_back(i);
                root_conflict.push_back(euf.conflict[r]);
            } else {
                c = it->second;
            }
            sk.edge_class[i] = c;
        }
        sk.edge_count = static_cast<int>(sk.edge_rep.size());
        sk.edge_reversed.assign(sk.edge_count, 0);
        for (int c = 0; c < sk.edge_count; ++c) sk.edge_reversed[c] = static_cast<char>(root_conflict[c]);
        // Parity relative to the least slot, not the union-find root.
        std::vector<int> rep_parity(sk.edge_count, 0);
        for (int c = 0; c < sk.edge_count; ++c) {
            auto [r, p] = euf.find(sk.edge_rep[c]);
            (void)r;
            rep_parity[c] = p;
        }
        for (int i = 0; i < 6 * n; ++i) {
            auto [r, p] = euf.find(i);
            (void)r;
            sk.edge_parity[i] = p ^ rep_parity[sk.edge_class[i]];
        }
    }

    sk.edge_degree.assign(sk.edge_count, 0);
    for (int i = 0; i < 6 * n; ++i) ++sk.edge_degree[sk.edge_class[i]];

    // Boundary flags.
    sk.face_boundary.assign(sk.face_count, 0);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.is_boundary_face(t, f)) sk.face_boundary[sk.face_class[4 * t + f]] = 1;

    sk.edge_boundary.assign(sk.edge_count, 0);
    sk.vertex_boundary.assign(sk.vertex_count, 0);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (!tri.is_boundary_face(t, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                sk.vertex_boundary[sk.vertex_class[4 * t + v]] = 1;
            }
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
                if (a == f || b == f) continue;
                sk.edge_boundary[sk.edge_class[6 * t + e]] = 1;
            }
        }
    }

    // Vertex links: one triangle per corner slot, sides matched across face gluings.
    // Corner (t,v) has a side in each face f != v; the side is matched iff the face is glued.
    {
        sk.vertex_link.assign(sk.vertex_count, LinkInfo{});
        int corners = 4 * n;
        PlainUF comp(corners);
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(t, f);
                if (!g) continue;
                for (int v = 0; v < 4; ++v) {
                    if (v == f) continue;
                    comp.unite(4 * t + v, 4 * g->tet + g->perm[v]);
                }
            }
        // Count cells of each link surface per vertex class:
        //   faces of link = corner slots; edges of link = matched side pairs (internal) counted
        //   once, unmatched sides once; vertices of link = orbits of side-endpoints.
        // A corner (t,v): its link triangle has corners indexed by the three edges (v,x); its
        // sides are indexed by the three faces f != v, side f joining the two corners (v,x),
        // (v,y) with {x,y} = face f minus v.
        // Endpoint orbit structure: endpoint (t, v, x) [x != v]; side (t, v, f) has endpoints
        // (t,v,x) for x in face f, x != v. Gluing at face f maps endpoint (t,v,x) to
        // (t', p(v), p(x)).
        PlainUF endp(16 * n);  // (t, v, x): 16*t + 4*v + x, diagonal unused
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(t, f);
                if (!g) continue;
                for (int v = 0; v < 4; ++v) {
                    if (v == f) continue;
                    for (int x = 0; x < 4; ++x) {
                        if (x == v || x == f) continue;
                        endp.unite(16 * t + 4 * v + x, 16 * g->tet + 4 * g->perm[v] + g->perm[x]);
                    }
                }
            }
        // Orientability of each link: orient each corner triangle by the cyclic order of its
        // corners (ascending vertex label) and propagate signs over matched sides.  A coherent
        // orientation traverses each shared side in opposite directions on its two triangles.
        // Canonical traversal of side {x,y} within cycle (c0,c1,c2): the direction in which the
        // pair appears consecutively.
        auto canon_dir = [](const std::array<int, 3>& cyc, int x, int y) {
            for (int k = 0; k < 3; ++k) {
                if (cyc[k] == x && cyc[(k + 1) % 3] == y) return std::pair<int, int>{x, y};
                if (cyc[k] == y && cyc[(k + 1) % 3] == x) return std::pair<int, int>{y, x};
            }
            return std::pair<int, int>{-1, -1};
        };
        std::vector<int> sign(corners, 0);
        std::vector<char> nonorient_root(corners, 0);
        for (int start = 0; start < corners; ++start) {
            if (sign[start] != 0) continue;
            sign[start] = 1;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                int t = c / 4, v = c % 4;
                std::array<int, 3> cycA{};
                {
                    int k = 0;
                    for (int x = 0; x < 4; ++x)
                        if (x != v) cycA[k++] = x;
                }
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    const auto& g = tri.gluing(t, f);
                    if (!g) continue;
                    int v2 = g->perm[v];
                    int c2 = 4 * g->tet + v2;
                    std::array<int, 2> xy{};
                    int k = 0;
                    for (int x = 0; x < 4; ++x)
                        if (x != v && x != f) xy[k++] = x;
                    auto [P, Q] = canon_dir(cycA, xy[0], xy[1]);
                    int Pimg = g->perm[P], Qimg = g->perm[Q];
                    std::array<int, 3> cycB{};
                    k = 0;
                    for (int x = 0; x < 4; ++x)
                        if (x != v2) cycB[k++] = x;
                    auto [R, S] = canon_dir(cycB, Pimg, Qimg);
                    // Opposite traversal (P->Q vs S->R) means equal signs are coherent.
                    int rel = (Pimg == S && Qimg == R) ? 1 : -1;
                    if (sign[c2] == 0) {
                        sign[c2] = rel * sign[c];
                        stack.push_back(c2);
                    } else if (sign[c2] != rel * sign[c]) {
                        nonorient_root[comp.find(c)] = 1;
                    }
                }
            }
        }

        // Aggregate per vertex class.
        std::vector<long long> link_faces(sk.vertex_count, 0), link_sides_internal(sk.vertex_count, 0),
            link_sides_bdry(sk.vertex_count, 0);
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v) {
                int cls = sk.vertex_class[4 * t + v];
                ++link_faces[cls];
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    if (tri.gluing(t, f))
                        ++link_sides_internal[cls];
                    else
                        ++link_sides_bdry[cls];
                }
            }
        std::vector<long long> link_vertices(sk.vertex_count, 0);
        {
            std::vector<char> seen(16 * n, 0);
            for (int t = 0; t < n; ++t)
                for (int v = 0; v < 4; ++v)
                    for (int x = 0; x < 4; ++x) {
                        if (x == v) continue;
                        int r = endp.find(16 * t + 4 * v + x);
                        if (!seen[r]) {
                            seen[r] = 1;
                            ++link_vertices[sk.vertex_class[4 * t + v]];
                        }
                    }
        }
        std::vector<char> cls_nonorient(sk.vertex_count, 0);
        for (int c = 0; c < corners; ++c)
            if (nonorient_root[comp.find(c)]) cls_nonorient[sk.vertex_class[c]] = 1;

        for (int c = 0; c < sk.vertex_count; ++c) {
            LinkInfo li;
            long long E = link_sides_internal[c] / 2 + link_sides_bdry[c];
            li.euler = static_cast<int>(link_vertices[c] - E + link_faces[c]);
            li.closed = link_sides_bdry[c] == 0;
            li.orientable = !cls_nonorient[c];
            sk.vertex_link[c] = li;
        }
    }

    // Boundary surface: triangles are the boundary face slots.  Adjacency along each
    // triangle side by walking around the edge class through the glued tetrahedra.
    {
        sk.boundary_component_of_face.assign(4 * n, -1);
        std::vector<int> bfaces;  // slot ids 4*t+f
        std::vector<int> bindex(4 * n, -1);
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f)
                if (tri.is_boundary_face(t, f)) {
                    bindex[4 * t + f] = static_cast<int>(bfaces.size());
                    bfaces.push_back(4 * t + f);
                }
        int m = static_cast<int>(bfaces.size());

        // For each boundary triangle side (edge {a,b} of face f in tet t), walk to the partner
        // boundary triangle, recording the endpoint correspondence.
        struct SideMatch {
            int tri2;           // partner boundary triangle index
            int a2, b2;         // image vertex labels of a,b in the partner's tet
        };
        auto walk = [&](int t, int f, int a, int b) -> SideMatch {
            // Current position: tet t, entering face f (a boundary face), edge {a,b}.
            // The other face of t containing {a,b}:
            int cur_t = t;
            int via = -1;
            for (int x = 0; x < 4; ++x)
                if (x != a && x != b && x != f) via = x;
            int ca = a, cb = b;
            while (true) {
                const auto& g = tri.gluing(cur_t, via);
                if (!g) {
                    return SideMatch{bindex[4 * cur_t + via], ca, cb};
                }
                int nt = g->tet;
                int na = g->perm[ca], nb = g->perm[cb];
                int entered = g->perm[via];
                int nxt = -1;
                for (int x = 0; x < 4; ++x)
                    if (x != na && x != nb && x != entered) nxt = x;
                cur_t = nt;
                via = nxt;
                ca = na;
                cb = nb;
            }
        };

        PlainUF comp(std::max(1, m));
        // Corner orbits: corner key = 3*triIndex + local corner (0..2 by ascending vertex label).
        PlainUF corner_uf(std::max(1, 3 * m));
        std::vector<std::array<int, 3>> tri_verts(m);
        for (int i = 0; i < m; ++i) {
            int f = bfaces[i] % 4;
            int k = 0;
            for (int v = 0; v < 4; ++v)
                if (v != f) tri_verts[i][k++] = v;
        }
        auto local_of = [&](int i, int v) {
            for (int k = 0; k < 3; ++k)
                if (tri_verts[i][k] == v) return k;
            return -1;
        };

        long long side_pairs = 0;
        std::vector<int> sign(m, 0);
        std::vector<char> comp_nonorient(std::max(1, m), 0);
        std::vector<std::array<SideMatch, 3>> matches(m);
        for (int i = 0; i < m; ++i) {
            int t = bfaces[i] / 4, f = bfaces[i] % 4;
            for (int s = 0; s < 3; ++s) {
                // Side s = the side omitting local corner s.
                int a = tri_verts[i][(s + 1) % 3], b = tri_verts[i][(s + 2) % 3];
                if (a > b) std::swap(a, b);
                matches[i][s] = walk(t, f, a, b);
                const auto& sm = matches[i][s];
                comp.unite(i, sm.tri2);
                corner_uf.unite(3 * i + local_of(i, a), 3 * sm.tri2 + local_of(sm.tri2, sm.a2));
                corner_uf.unite(3 * i + local_of(i, b), 3 * sm.tri2 + local_of(sm.tri2, sm.b2));
            }
        }
        // Each side matched exactly once with its partner: total sides 3m, so E = 3m/2.
        side_pairs = (3LL * m) / 2;

        // Orientation propagation over the boundary surface, cyclic order = ascending labels.
        auto canon_dir3 = [](const std::array<int, 3>& cyc, int x, int y) {
            for (int k = 0; k < 3; ++k) {
                if (cyc[k] == x && cyc[(k + 1) % 3] == y) return std::pair<int, int>{x, y};
                if (cyc[k] == y && cyc[(k + 1) % 3] == x) return std::pair<int, int>{y, x};
            }
            return std::pair<int, int>{-1, -1};
        };
        for (int start = 0; start < m; ++start) {
            if (sign[start] != 0) continue;
            sign[start] = 1;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (int s = 0; s < 3; ++s) {
                    const auto& sm = matches[i][s];
                    int a = tri_verts[i][(s + 1) % 3], b = tri_verts[i][(s + 2) % 3];
                    if (a > b) std::swap(a, b);
                    auto [P, Q] = canon_dir3(tri_verts[i], a, b);
                    int Pimg = (P == a) ? sm.a2 : sm.b2;
                    int Qimg = (Q == b) ? sm.b2 : sm.a2;
                    auto [R, S] = canon_dir3(tri_verts[sm.tri2], sm.a2, sm.b2);
                    int rel = (Pimg == S && Qimg == R) ? 1 : -1;
                    if (sign[sm.tri2] == 0) {
                        sign[sm.tri2] = rel * sign[i];
                        stack.push_back(sm.tri2);
                    } else if (sign[sm.tri2] != rel * sign[i]) {
                        comp_nonorient[comp.find(i)] = 1;
                    }
                }
            }
        }

        // Export the surface combinatorics.
        auto& bs = sk.boundary_surface;
        bs.faces = bfaces;
        bs.index_of_slot = bindex;
        bs.side_partner.assign(m, {});
        bs.corner_orbit.assign(m, {});
        for (int i = 0; i < m; ++i)
            for (int s = 0; s < 3; ++s) {
                const auto& sm = matches[i][s];
                int third2 = -1;
                int f2 = bfaces[sm.tri2] % 4;
                for (int v = 0; v < 4; ++v)
                    if (v != f2 && v != sm.a2 && v != sm.b2) third2 = v;
                bs.side_partner[i][s] =
                    BoundarySurface::Side{sm.tri2, local_of(sm.tri2, third2), sm.a2, sm.b2};
            }
        {
            std::map<int, int> orbit_id;
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < 3; ++k) {
                    int r = corner_uf.find(3 * i + k);
                    auto it = orbit_id.find(r);
                    if (it == orbit_id.end()) it = orbit_id.emplace(r, static_cast<int>(orbit_id.size())).first;
                    bs.corner_orbit[i][k] = it->second;
                }
            bs.orbit_count = static_cast<int>(orbit_id.size());
        }

        // Collect components.
        std::map<int, int> root_to_comp;
        for (int i = 0; i < m; ++i) {
            int r = comp.find(i);
            if (!root_to_comp.count(r)) {
                int id = static_cast<int>(root_to_comp.size());
                root_to_comp.emplace(r, id);
            }
        }
        int ncomp = static_cast<int>(root_to_comp.size());
        std::vector<long long> cV(ncomp, 0), cE(ncomp, 0), cF(ncomp, 0);
        std::vector<char> cNo(ncomp, 0);
        std::vector<std::vector<int>> cverts(ncomp);
        for (int i = 0; i < m; ++i) {
            int c = root_to_comp[comp.find(i)];
            ++cF[c];
            sk.boundary_component_of_face[bfaces[i]] = c;
            if (comp_nonorient[comp.find(i)]) cNo[c] = 1;
        }
        bs.orbit_component.assign(bs.orbit_count, -1);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < 3; ++k)
                bs.orbit_component[bs.corner_orbit[i][k]] = root_to_comp[comp.find(i)];
        {
            std::vector<char> seen(std::max(1, 3 * m), 0);
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < 3; ++k) {
                    int r = corner_uf.find(3 * i + k);
                    if (!seen[r]) {
                        seen[r] = 1;
                        ++cV[root_to_comp[comp.find(i)]];
                    }
                }
        }
        for (int c = 0; c < ncomp; ++c) cE[c] = 0;
        for (int i = 0; i < m; ++i) cE[root_to_comp[comp.find(i)]] += 3;
        for (int c = 0; c < ncomp; ++c) cE[c] /= 2;
        (void)side_pairs;

        sk.boundary.clear();
        for (int c = 0; c < ncomp; ++c) {
            BoundaryComponent bc;
            bc.euler = static_cast<int>(cV[c] - cE[c] + cF[c]);
            bc.orientable = !cNo[c];
            bc.genus = bc.orientable ? (2 - bc.euler) / 2 : (2 - bc.euler);
            bc.triangle_count = static_cast<int>(cF[c]);
            bc.corner_orbits = static_cast<int>(cV[c]);
            sk.boundary.push_back(bc);
        }
        // Vertex classes per boundary component.
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                if (!tri.is_boundary_face(t, f)) continue;
                int c = sk.boundary_component_of_face[4 * t + f];
                for (int v = 0; v < 4; ++v) {
                    if (v == f) continue;
                    int vc = sk.vertex_class[4 * t + v];
                    auto& list = sk.boundary[c].vertex_classes;
                    if (std::find(list.begin(), list.end(), vc) == list.end()) list.push_back(vc);
                }
            }
        for (auto& bc : sk.boundary) std::sort(bc.vertex_classes.begin(), bc.vertex_classes.end());
    }

    return sk;
}

int euler_characteristic(const Triangulation& t) { return make_skeleton(t).euler_characteristic(); }

bool edges_valid(const Triangulation& tri) {
    int n = tri.size();
    ParityUF euf(6 * n);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
                if (a == f || b == f) continue;
                int pa = g->perm[a], pb = g->perm[b];
                euf.unite(6 * t + e, 6 * g->tet + edge_index(pa, pb), (pa > pb) ? 1 : 0);
            }
        }
    }
    for (int i = 0; i < 6 * n; ++i) {
        auto [r, p] = euf.find(i);
        (void)p;
        if (euf.conflict[r]) return false;
    }
    return true;
}

std::optional<std::vector<int>> orientation_signs(const Triangulation& tri) {
    if (!tri.is_connected()) throw std::runtime_error("orientation_signs: triangulation must be connected");
    if (tri.empty()) return std::vector<int>{};
    std::vector<int> sign(tri.size(), 0);
    sign[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            int want = -sign[t] * g->perm.sign();
            if (sign[g->tet] == 0) {
                sign[g->tet] = want;
                stack.push_back(g->tet);
            } else if (sign[g->tet] != want) {
                return std::nullopt;
            }
        }
    }
    return sign;
}

}  // namespace cusped
