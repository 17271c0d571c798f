#include "cusped/truncate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cusped {

namespace {

// Corners of the truncated polyhedron inside one tetrahedron:
//   V(v)   = original vertex v (kept),            id = v
//   E(v,x) = point on edge {v,x} near v (v cut),  id = 4 + 3*v + idx(x)
int corner_V(int v) { return v; }
int corner_E(int v, int x) {
    int idx = x - (x > v ? 1 : 0);  // 0..2
    return 4 + 3 * v + idx;
}

int map_corner(int c, const Perm4& p) {
    if (c < 4) return corner_V(p[c]);
    int v = (c - 4) / 3;
    int idx = (c - 4) % 3;
    int x = idx + (idx >= v ? 1 : 0);
    return corner_E(p[v], p[x]);
}

struct OutTet {
    int src_tet;
    std::array<int, 3> corners;  // boundary triangle corners (apex is label 0)
};

}  // namespace

Triangulation truncate_vertices(const Triangulation& t, const std::vector<int>& vertex_classes) {
    Skeleton sk = make_skeleton(t);
    std::vector<char> cut_class(sk.vertex_count, 0);
    for (int c : vertex_classes) {
        if (c < 0 || c >= sk.vertex_count) throw std::runtime_error("truncate: unknown vertex class");
        cut_class[c] = 1;
    }
    auto cut = [&](int tet, int v) { return cut_class[sk.vertex_class[4 * tet + v]] != 0; };

    std::vector<OutTet> tets;
    // (src_tet, sorted corner pair) -> output faces awaiting an internal (same-block) partner.
    std::map<std::tuple<int, int, int>, std::vector<std::pair<int, int>>> edge_faces;
    // face fan triangles per face slot, aligned across gluings.
    std::map<int, std::vector<std::array<int, 3>>> face_fans;

    auto polygon_of_face = [&](int tet, int f) {
        std::array<int, 3> fv{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) fv[k++] = v;
        std::vector<int> cyc;
        for (int i = 0; i < 3; ++i) {
            int v = fv[i], prev = fv[(i + 2) % 3], next = fv[(i + 1) % 3];
            if (!cut(tet, v)) {
                cyc.push_back(corner_V(v));
            } else {
                cyc.push_back(corner_E(v, prev));
                cyc.push_back(corner_E(v, next));
            }
        }
        return cyc;
    };

    auto fan_triangles = [&](const std::vector<int>& cyc) {
        size_t k = cyc.size();
        size_t a = 0;
        for (size_t i = 1; i < k; ++i)
            if (cyc[i] < cyc[a]) a = i;
        std::vector<std::array<int, 3>> out;
        for (size_t i = 1; i + 1 < k; ++i)
            out.push_back({cyc[a], cyc[(a + i) % k], cyc[(a + i + 1) % k]});
        return out;
    };

    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (g) {
                int here = 4 * tet + f, there = 4 * g->tet + g->face;
                if (there < here) {
                    // Mirror the partner's fan through the gluing so the two sides align.
                    const auto& partner = face_fans.at(there);
                    std::vector<std::array<int, 3>> mine;
                    Perm4 inv = g->perm.inverse();
                    for (const auto& tr : partner)
                        mine.push_back({map_corner(tr[0], inv), map_corner(tr[1], inv), map_corner(tr[2], inv)});
                    face_fans[here] = std::move(mine);
                    continue;
                }
            }
            face_fans[4 * tet + f] = fan_triangles(polygon_of_face(tet, f));
        }
    }

    // Output tetrahedra: cone each boundary triangle of the block from the block's apex.
    // Block boundary triangles: the face fans plus one link triangle per cut corner.
    std::map<std::pair<int, int>, int> fan_out;  // (face slot, fan index) -> out tet
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto& fans = face_fans[4 * tet + f];
            for (size_t i = 0; i < fans.size(); ++i) {
                fan_out[{4 * tet + f, static_cast<int>(i)}] = static_cast<int>(tets.size());
                tets.push_back(OutTet{tet, fans[i]});
            }
        }
        for (int v = 0; v < 4; ++v) {
            if (!cut(tet, v)) continue;
            std::array<int, 3> link{};
            int k = 0;
            for (int x = 0; x < 4; ++x)
                if (x != v) link[k++] = corner_E(v, x);
            tets.push_back(OutTet{tet, link});  // stays boundary
        }
    }

    // Label convention: output tet = (apex=0, corners sorted ascending at labels 1..3).
    auto sorted_corners = [&](const OutTet& ot) {
        std::array<int, 3> c = ot.corners;
        std::sort(c.begin(), c.end());
        return c;
    };
    auto label_of_corner = [&](const OutTet& ot, int corner) {
        auto c = sorted_corners(ot);
        for (int i = 0; i < 3; ++i)
            if (c[i] == corner) return i + 1;
        throw std::runtime_error("truncate: corner not in triangle");
    };

    Triangulation out(static_cast<int>(tets.size()));

    // Within-block gluings: boundary triangles of one block sharing a corner pair.
    for (size_t i = 0; i < tets.size(); ++i) {
        auto c = sorted_corners(tets[i]);
        std::array<std::pair<int, int>, 3> pairs{{{c[0], c[1]}, {c[0], c[2]}, {c[1], c[2]}}};
        for (const auto& [x, y] : pairs)
            edge_faces[{tets[i].src_tet, x, y}].push_back({static_cast<int>(i), 0});
    }
    for (const auto& [key, faces] : edge_faces) {
        if (faces.size() != 2) throw std::runtime_error("truncate: block boundary is not a surface");
        auto [ti, unused1] = faces[0];
        auto [tj, unused2] = faces[1];
        (void)unused1;
        (void)unused2;
        int x = std::get<1>(key), y = std::get<2>(key);
        // Glue along the face (apex, x, y): the face opposite the third corner.
        auto third = [&](const OutTet& ot) {
            for (int c : ot.corners)
                if (c != x && c != y) return c;
            throw std::runtime_error("truncate: degenerate triangle");
        };
        int ci = third(tets[ti]), cj = third(tets[tj]);
        std::array<int, 4> img{};
        img[0] = 0;
        img[label_of_corner(tets[ti], x)] = label_of_corner(tets[tj], x);
        img[label_of_corner(tets[ti], y)] = label_of_corner(tets[tj], y);
        img[label_of_corner(tets[ti], ci)] = label_of_corner(tets[tj], cj);
        Perm4 p(img[0], img[1], img[2], img[3]);
        int fi = label_of_corner(tets[ti], ci);
        if (!out.gluing(ti, fi)) out.join(ti, fi, tj, p[fi], p);
    }

    // Across-face gluings: fan triangle i of an internal face pairs with fan triangle i
    // of the partner slot (the fans were mirrored).
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (!g) continue;
            int here = 4 * tet + f, there = 4 * g->tet + g->face;
            if (there < here) continue;
            const auto& fans = face_fans[here];
            for (size_t i = 0; i < fans.size(); ++i) {
                int a = fan_out[{here, static_cast<int>(i)}];
                int b = fan_out[{there, static_cast<int>(i)}];
                std::array<int, 4> img{};
                img[0] = 0;
                for (int c : tets[a].corners)
                    img[label_of_corner(tets[a], c)] = label_of_corner(tets[b], map_corner(c, g->perm));
                Perm4 p(img[0], img[1], img[2], img[3]);
                if (!out.gluing(a, 0)) out.join(a, 0, b, 0, p);
            }
        }
    }

    auto diag = out.validate();
    if (!diag.empty()) throw std::runtime_error("truncate: invalid result: " + diag.front().message);
    return out;
}

Triangulation materialize(const Triangulation& t) {
    Skeleton sk = make_skeleton(t);
    std::vector<int> cut;
    for (int c = 0; c < sk.vertex_count; ++c)
        if (!sk.vertex_link[c].is_sphere() && !sk.vertex_link[c].is_disk()) cut.push_back(c);
    if (cut.empty()) return t;
    return truncate_vertices(t, cut);
}

}  // namespace cusped
