#include "cusped/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace cusped {

namespace {

bool result_clean(const Triangulation& t) {
    if (!t.is_valid()) return false;
    for (int tt = 0; tt < t.size(); ++tt)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tt, f);
            if (g && g->tet == tt && g->face == f) return false;  // face glued to itself
        }
    Skeleton sk = make_skeleton(t);
    return sk.all_edges_valid();
}

}  // namespace

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Fold: return "fold";
        case MoveKind::Layer: return "layer";
        case MoveKind::Pachner23: return "pachner23";
        case MoveKind::Pachner32: return "pachner32";
    }
    return "?";
}

std::optional<MoveKind> move_kind_from_name(const std::string& s) {
    if (s == "fold") return MoveKind::Fold;
    if (s == "layer") return MoveKind::Layer;
    if (s == "pachner23") return MoveKind::Pachner23;
    if (s == "pachner32") return MoveKind::Pachner32;
    return std::nullopt;
}

std::optional<BoundaryEdgeSides> boundary_sides_of_edge(const Triangulation& t, const Skeleton& sk, int edge_class) {
    if (edge_class < 0 || edge_class >= sk.edge_count) return std::nullopt;
    if (!sk.edge_boundary[edge_class] || sk.edge_reversed[edge_class]) return std::nullopt;
    // Find a boundary face containing a slot of this class.
    for (int tt = 0; tt < t.size(); ++tt) {
        for (int f = 0; f < 4; ++f) {
            if (!t.is_boundary_face(tt, f)) continue;
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
                if (a == f || b == f) continue;
                if (sk.edge_class[6 * tt + e] != edge_class) continue;
                // Walk from (tt, f) around the edge to the opposite boundary face.
                int cur_t = tt, ca = a, cb = b;
                int via = -1;
                for (int x = 0; x < 4; ++x)
                    if (x != a && x != b && x != f) via = x;
                while (true) {
                    const auto& g = t.gluing(cur_t, via);
                    if (!g) break;
                    int na = g->perm[ca], nb = g->perm[cb], entered = g->perm[via];
                    cur_t = g->tet;
                    ca = na;
                    cb = nb;
                    via = -1;
                    for (int x = 0; x < 4; ++x)
                        if (x != na && x != nb && x != entered) via = x;
                }
                return BoundaryEdgeSides{tt, f, a, b, cur_t, via, ca, cb};
            }
        }
    }
    return std::nullopt;
}

std::optional<MoveResult> pachner_23(const Triangulation& t, int face_class) {
    Skeleton sk = make_skeleton(t);
    if (face_class < 0 || face_class >= sk.face_count || sk.face_boundary[face_class]) return std::nullopt;
    int slot = sk.face_rep[face_class];
    int t0 = slot / 4, f0 = slot % 4;
    const auto& g = t.gluing(t0, f0);
    if (!g) return std::nullopt;
    int t1 = g->tet, f1 = g->face;
    if (t0 == t1) return std::nullopt;  // the move needs two distinct tetrahedra
    Perm4 glue = g->perm;

    std::array<int, 3> u{};
    {
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f0) u[k++] = v;
    }

    int n = t.size();
    // Survivors keep their order; the three new tetrahedra go at the end.
    std::vector<int> renum(n, -1);
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (i != t0 && i != t1) renum[i] = m++;
    std::array<int, 3> N{m, m + 1, m + 2};

    // phi0[i]: labels of N_i -> labels of t0; phi1[i]: labels of N_i -> labels of t1.
    std::array<Perm4, 3> phi0, phi1;
    for (int i = 0; i < 3; ++i) {
        std::array<int, 2> rest{};
        int k = 0;
        for (int j = 0; j < 3; ++j)
            if (j != i) rest[k++] = j;
        phi0[i] = Perm4(f0, u[i], u[rest[0]], u[rest[1]]);
        phi1[i] = Perm4(glue[u[i]], f1, glue[u[rest[0]]], glue[u[rest[1]]]);
    }

    Triangulation out(m + 3);
    std::vector<int> face_origin(4 * (m + 3), -1);
    for (int i = 0; i < n; ++i) {
        if (renum[i] < 0) continue;
        for (int f = 0; f < 4; ++f) face_origin[4 * renum[i] + f] = 4 * i + f;
    }

    // Internal gluings among the new tetrahedra.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int k = 3 - i - j;
            auto label_of = [&](int which, int target_u) {
                // label of vertex u[target_u] inside N_which
                const Perm4& p = phi0[which];
                for (int l = 2; l <= 3; ++l)
                    if (p[l] == u[target_u]) return l;
                return -1;
            };
            int li_k = label_of(i, k);
            int lj_k = label_of(j, k);
            int li_j = label_of(i, j);  // face of N_i shared with N_j is opposite u[j]'s label
            int lj_i = label_of(j, i);
            std::array<int, 4> img{};
            img[0] = 0;
            img[1] = 1;
            img[li_k] = lj_k;
            img[li_j] = lj_i;
            Perm4 p(img[0], img[1], img[2], img[3]);
            if (!out.gluing(N[i], li_j)) out.join(N[i], li_j, N[j], p[li_j], p);
        }

    // External faces: old (t0, u[i]) corresponds to N_i's face 1; old (t1, glue[u[i]]) to face 0.
    std::map<int, std::pair<int, int>> corr;     // old slot -> (new tet, new face)
    std::map<int, Perm4> corr_map;               // old slot -> old labels -> new labels
    for (int i = 0; i < 3; ++i) {
        corr[4 * t0 + u[i]] = {N[i], 1};
        corr_map[4 * t0 + u[i]] = phi0[i].inverse();
        corr[4 * t1 + glue[u[i]]] = {N[i], 0};
        corr_map[4 * t1 + glue[u[i]]] = phi1[i].inverse();
    }
    for (auto& [old_slot, dst] : corr) {
        int ot = old_slot / 4, of = old_slot % 4;
        face_origin[4 * dst.first + dst.second] = old_slot;
        const auto& og = t.gluing(ot, of);
        if (!og) continue;  // stays boundary
        if (out.gluing(dst.first, dst.second)) continue;  // installed from the other side
        Perm4 psi = corr_map[old_slot];
        if (og->tet != t0 && og->tet != t1) {
            Perm4 p = og->perm * psi.inverse();
            out.join(dst.first, dst.second, renum[og->tet], p[dst.second], p);
        } else {
            int partner = 4 * og->tet + og->face;
            auto it = corr.find(partner);
            if (it == corr.end()) return std::nullopt;  // partner was the internal face: impossible
            Perm4 p = corr_map[partner] * og->perm * psi.inverse();
            if (dst == it->second) return std::nullopt;  // would glue a face to itself
            out.join(dst.first, dst.second, it->second.first, p[dst.second], p);
        }
    }

    if (!result_clean(out)) return std::nullopt;
    MoveResult res{std::move(out), std::move(face_origin), 6 * N[0] + edge_index(0, 1)};
    return res;
}

std::optional<MoveResult> pachner_32(const Triangulation& t, int edge_class) {
    Skeleton sk = make_skeleton(t);
    if (edge_class < 0 || edge_class >= sk.edge_count) return std::nullopt;
    if (sk.edge_boundary[edge_class] || sk.edge_reversed[edge_class]) return std::nullopt;
    if (sk.edge_degree[edge_class] != 3) return std::nullopt;

    // Walk around the edge collecting the three tetrahedra with apex/equator labels.
    int slot = sk.edge_rep[edge_class];
    int T0 = slot / 6, e0 = slot % 6;
    int a = kEdgeVertices[e0][0], b = kEdgeVertices[e0][1];
    std::array<int, 3> T{};
    std::array<int, 3> av{}, bv{};   // apex labels per tet
    std::array<int, 3> wprev{}, wnext{};  // equatorial labels: w_{i-1} and w_i inside T_i
    {
        int cur_t = T0, ca = a, cb = b;
        // choose the two equatorial labels of T0
        std::array<int, 2> eq{};
        int k = 0;
        for (int x = 0; x < 4; ++x)
            if (x != ca && x != cb) eq[k++] = x;
        int enter = eq[0];  // treat as w_{-1} = w_2; exit through face opposite enter? walk via exit vertex
        int exit = eq[1];
        for (int i = 0; i < 3; ++i) {
            T[i] = cur_t;
            av[i] = ca;
            bv[i] = cb;
            wprev[i] = enter;
            wnext[i] = exit;
            const auto& g = t.gluing(cur_t, exit == -1 ? 0 : exit);
            // we pass through the face opposite `enter`... walk through the face containing the
            // edge and the exit vertex: that face is the one opposite `enter`.
            const auto& gg = t.gluing(cur_t, enter);
            if (!gg) return std::nullopt;
            (void)g;
            int nt = gg->tet;
            int na = gg->perm[ca], nb = gg->perm[cb], nw = gg->perm[exit];
            int entered_face = gg->perm[enter];
            cur_t = nt;
            ca = na;
            cb = nb;
            enter = nw;  // the shared equatorial vertex w_i seen from T_{i+1}
            // continue: exit = the remaining vertex
            exit = -1;
            for (int x = 0; x < 4; ++x)
                if (x != ca && x != cb && x != enter) exit = x;
            (void)entered_face;
        }
        if (cur_t != T0 || ca != a || cb != b) return std::nullopt;  // reversed or longer orbit
        if (enter != wprev[0] || exit != wnext[0]) return std::nullopt;
    }
    if (T[0] == T[1] || T[1] == T[2] || T[0] == T[2]) return std::nullopt;

    // Wait: the walk above passes through the face opposite `enter`, which is the face
    // containing {edge, exit}. With that convention wnext[i] is shared with T[i+1].
    int n = t.size();
    std::vector<int> renum(n, -1);
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (i != T[0] && i != T[1] && i != T[2]) renum[i] = m++;
    int MP = m, MQ = m + 1;
    // M_P = (P=a side): labels 0=P, 1=w_0, 2=w_1, 3=w_2 where w_i = wnext[i] as a class;
    // inside T_i the vertex w_i has label wnext[i], and w_{i-1} has label wprev[i].

    Triangulation out(m + 2);
    std::vector<int> face_origin(4 * (m + 2), -1);
    for (int i = 0; i < n; ++i) {
        if (renum[i] < 0) continue;
        for (int f = 0; f < 4; ++f) face_origin[4 * renum[i] + f] = 4 * i + f;
    }
    out.join(MP, 0, MQ, 0, Perm4(0, 1, 2, 3));

    // External correspondences: old (T_i, face opp bv[i]) -> (MP, face opp label of missing w).
    std::map<int, std::pair<int, int>> corr;
    std::map<int, Perm4> corr_map;
    for (int i = 0; i < 3; ++i) {
        int iprev = (i + 2) % 3;
        int k = 3 - i - iprev;  // the missing equatorial index: {0,1,2} minus {i-1, i}
        // labels inside M_*: w_j has label j+1.
        std::array<int, 4> img{};
        // a-side: T_i face opposite bv[i] = {av[i], wprev[i], wnext[i]} -> MP face opp (k+1)
        img[av[i]] = 0;
        img[wprev[i]] = iprev + 1;
        img[wnext[i]] = i + 1;
        img[bv[i]] = k + 1;
        Perm4 pa(img[0], img[1], img[2], img[3]);
        corr[4 * T[i] + bv[i]] = {MP, k + 1};
        corr_map[4 * T[i] + bv[i]] = pa;
        // b-side -> MQ
        img[av[i]] = k + 1;
        img[bv[i]] = 0;
        Perm4 pb(img[0], img[1], img[2], img[3]);
        corr[4 * T[i] + av[i]] = {MQ, k + 1};
        corr_map[4 * T[i] + av[i]] = pb;
    }
    for (auto& [old_slot, dst] : corr) {
        int ot = old_slot / 4, of = old_slot % 4;
        face_origin[4 * dst.first + dst.second] = old_slot;
        const auto& og = t.gluing(ot, of);
        if (!og) continue;
        if (out.gluing(dst.first, dst.second)) continue;
        Perm4 psi = corr_map[old_slot];
        bool dead = (og->tet == T[0] || og->tet == T[1] || og->tet == T[2]);
        if (!dead) {
            Perm4 p = og->perm * psi.inverse();
            out.join(dst.first, dst.second, renum[og->tet], p[dst.second], p);
        } else {
            int partner = 4 * og->tet + og->face;
            auto it = corr.find(partner);
            if (it == corr.end()) return std::nullopt;  // glued into one of the internal faces
            if (dst == it->second) return std::nullopt;
            Perm4 p = corr_map[partner] * og->perm * psi.inverse();
            out.join(dst.first, dst.second, it->second.first, p[dst.second], p);
        }
    }

    if (!result_clean(out)) return std::nullopt;
    return MoveResult{std::move(out), std::move(face_origin), -1};
}

std::optional<MoveResult> close_book(const Triangulation& t, int edge_class) {
    Skeleton sk = make_skeleton(t);
    auto sides = boundary_sides_of_edge(t, sk, edge_class);
    if (!sides) return std::nullopt;
    auto& s = *sides;
    if (s.tet_a == s.tet_b && s.face_a == s.face_b) return std::nullopt;
    int third_a = -1, third_b = -1;
    for (int x = 0; x < 4; ++x) {
        if (x != s.a1 && x != s.b1 && x != s.face_a) third_a = x;
        if (x != s.a2 && x != s.b2 && x != s.face_b) third_b = x;
    }
    // The two triangles together must form an embedded square in the boundary surface:
    // then the fold attaches a pinched prism (a ball) along an embedded disk.
    {
        const auto& bs = sk.boundary_surface;
        int fa = bs.index_of_slot[4 * s.tet_a + s.face_a];
        int fb = bs.index_of_slot[4 * s.tet_b + s.face_b];
        int la = bs.local_corner(fa, s.a1, s.face_a), lb = bs.local_corner(fa, s.b1, s.face_a);
        int lx = bs.local_corner(fa, third_a, s.face_a);
        int la2 = bs.local_corner(fb, s.a2, s.face_b), lb2 = bs.local_corner(fb, s.b2, s.face_b);
        int ly = bs.local_corner(fb, third_b, s.face_b);
        std::array<int, 4> orbits{bs.corner_orbit[fa][la], bs.corner_orbit[fa][lb], bs.corner_orbit[fa][lx],
                                  bs.corner_orbit[fb][ly]};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (orbits[i] == orbits[j]) return std::nullopt;
        // The four outer sides must pair with sides outside the square.
        std::array<std::pair<int, int>, 4> outer{{{fa, la}, {fa, lb}, {fb, la2}, {fb, lb2}}};
        for (const auto& [fi, si] : outer) {
            const auto& p = bs.side_partner[fi][si];
            for (const auto& [fj, sj] : outer)
                if (p.face == fj && p.side == sj) return std::nullopt;
        }
    }
    std::array<int, 4> img{};
    img[s.a1] = s.a2;
    img[s.b1] = s.b2;
    img[third_a] = third_b;
    img[s.face_a] = s.face_b;
    Perm4 p(img[0], img[1], img[2], img[3]);

    Triangulation out = t;
    out.join(s.tet_a, s.face_a, s.tet_b, s.face_b, p);
    if (!result_clean(out)) return std::nullopt;
    std::vector<int> face_origin(4 * out.size());
    for (int i = 0; i < 4 * out.size(); ++i) face_origin[i] = i;
    return MoveResult{std::move(out), std::move(face_origin), -1};
}

std::optional<MoveResult> layer_on_edge(const Triangulation& t, int edge_class) {
    Skeleton sk = make_skeleton(t);
    auto sides = boundary_sides_of_edge(t, sk, edge_class);
    if (!sides) return std::nullopt;
    auto& s = *sides;
    if (s.tet_a == s.tet_b && s.face_a == s.face_b) return std::nullopt;
    int third_a = -1, third_b = -1;
    for (int x = 0; x < 4; ++x) {
        if (x != s.a1 && x != s.b1 && x != s.face_a) third_a = x;
        if (x != s.a2 && x != s.b2 && x != s.face_b) third_b = x;
    }
    Triangulation out = t;
    int L = out.add_tetrahedron();
    {
        std::array<int, 4> img{};
        img[0] = s.face_a;
        img[1] = third_a;
        img[2] = s.a1;
        img[3] = s.b1;
        Perm4 p(img[0], img[1], img[2], img[3]);
        out.join(L, 0, s.tet_a, s.face_a, p);
    }
    {
        std::array<int, 4> img{};
        img[0] = third_b;
        img[1] = s.face_b;
        img[2] = s.a2;
        img[3] = s.b2;
        Perm4 p(img[0], img[1], img[2], img[3]);
        out.join(L, 1, s.tet_b, s.face_b, p);
    }
    if (!result_clean(out)) return std::nullopt;
    std::vector<int> face_origin(4 * out.size(), -1);
    for (int i = 0; i < 4 * t.size(); ++i) face_origin[i] = i;
    face_origin[4 * L + 2] = 4 * s.tet_a + s.face_a;
    face_origin[4 * L + 3] = 4 * s.tet_b + s.face_b;
    return MoveResult{std::move(out), std::move(face_origin), -1};
}

FlattenResult flatten_and_remove(const Triangulation& t, const std::vector<char>& dead,
                                 const std::vector<FaceIdent>& idents, bool allow_lost_regions) {
    FlattenResult res;
    int n = t.size();
    // ident link per dead slot
    std::vector<int> ident_of(4 * n, -1);
    std::vector<Perm4> ident_perm(4 * n);
    std::vector<char> visited(4 * n, 0);
    for (size_t i = 0; i < idents.size(); ++i) {
        const auto& id = idents[i];
        int sa = 4 * id.tet_a + id.face_a, sb = 4 * id.tet_b + id.face_b;
        ident_of[sa] = sb;
        ident_perm[sa] = id.perm;
        ident_of[sb] = sa;
        ident_perm[sb] = id.perm.inverse();
    }
    std::vector<int> renum(n, -1);
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (!dead[i]) renum[i] = m++;
    res.tet_map = renum;
    Triangulation out(m);
    res.face_origin.assign(4 * m, -1);
    for (int i = 0; i < n; ++i)
        if (renum[i] >= 0)
            for (int f = 0; f < 4; ++f) res.face_origin[4 * renum[i] + f] = 4 * i + f;

    for (int i = 0; i < n; ++i) {
        if (dead[i]) continue;
        for (int f = 0; f < 4; ++f) {
            if (out.gluing(renum[i], f)) continue;
            const auto& g0 = t.gluing(i, f);
            if (!g0) continue;
            // Chase: gluing -> (dead? ident -> gluing -> ...) until live slot or open end.
            Perm4 acc = g0->perm;  // labels of i -> labels of current target tet
            int cur_t = g0->tet, cur_f = g0->face;
            bool open = false;
            int open_slot = -1;
            int guard = 0;
            while (dead[cur_t]) {
                if (++guard > 8 * n + 8) {
                    res.valid = false;
                    res.error = "flatten: unterminated identification chain";
                    return res;
                }
                int s = 4 * cur_t + cur_f;
                if (ident_of[s] < 0) {
                    res.valid = false;
                    res.error = "flatten: chain enters a dead tetrahedron without identification";
                    return res;
                }
                visited[s] = 1;
                Perm4 q = ident_perm[s];
                int s2 = ident_of[s];
                visited[s2] = 1;
                acc = q * acc;
                cur_t = s2 / 4;
                cur_f = s2 % 4;
                const auto& g = t.gluing(cur_t, cur_f);
                if (!g) {
                    open = true;
                    open_slot = 4 * cur_t + cur_f;
                    break;
                }
                acc = g->perm * acc;
                cur_t = g->tet;
                cur_f = g->face;
            }
            if (open) {
                res.face_origin[4 * renum[i] + f] = open_slot;
                continue;  // face becomes boundary
            }
            if (cur_t == i && cur_f == f) {
                // chain closed onto the same face slot
                res.valid = false;
                res.error = "flatten: face identified with itself";
                return res;
            }
            out.join(renum[i], f, renum[cur_t], acc[f], acc);
        }
    }
    if (!allow_lost_regions) {
        for (int s = 0; s < 4 * n; ++s)
            if (ident_of[s] >= 0 && !visited[s]) {
                res.valid = false;
                res.error = "flatten: a region would be collapsed away";
                return res;
            }
    }
    res.tri = std::move(out);
    return res;
}

std::optional<MoveResult> two_zero_edge(const Triangulation& t, int edge_class) {
    Skeleton sk = make_skeleton(t);
    if (edge_class < 0 || edge_class >= sk.edge_count) return std::nullopt;
    if (sk.edge_boundary[edge_class] || sk.edge_reversed[edge_class]) return std::nullopt;
    if (sk.edge_degree[edge_class] != 2) return std::nullopt;
    // The two slots.
    std::array<int, 2> slots{-1, -1};
    int k = 0;
    for (int i = 0; i < 6 * t.size() && k < 2; ++i)
        if (sk.edge_class[i] == edge_class) slots[k++] = i;
    int T1 = slots[0] / 6, e1 = slots[0] % 6;
    int T2 = slots[1] / 6, e2 = slots[1] % 6;
    (void)e2;
    if (T1 == T2) return std::nullopt;
    int a1 = kEdgeVertices[e1][0], b1 = kEdgeVertices[e1][1];
    std::array<int, 2> eq{};
    k = 0;
    for (int x = 0; x < 4; ++x)
        if (x != a1 && x != b1) eq[k++] = x;
    int c1 = eq[0], d1 = eq[1];
    const auto& gc = t.gluing(T1, c1);  // through the face opposite c1
    const auto& gd = t.gluing(T1, d1);
    if (!gc || !gd || gc->tet != T2 || gd->tet != T2) return std::nullopt;
    if (gc->perm[a1] != gd->perm[a1] || gc->perm[b1] != gd->perm[b1]) return std::nullopt;
    int a2 = gc->perm[a1], b2 = gc->perm[b1];
    int c2 = gd->perm[c1], d2 = gc->perm[d1];
    if (c2 == d2) return std::nullopt;
    // Eligibility: the edges opposite e must be distinct classes and not both boundary, and
    // each pair of faces to be flattened must be neither mutually glued nor both boundary.
    {
        int opp1 = sk.edge_class[6 * T1 + edge_index(c1, d1)];
        int opp2 = sk.edge_class[6 * T2 + edge_index(c2, d2)];
        if (opp1 == opp2) return std::nullopt;
        if (sk.edge_boundary[opp1] && sk.edge_boundary[opp2]) return std::nullopt;
    }
    for (auto [s1, s2] : {std::pair<int, int>{a1, a2}, std::pair<int, int>{b1, b2}}) {
        const auto& f1 = t.gluing(T1, s1);
        const auto& f2 = t.gluing(T2, s2);
        if (!f1 && !f2) return std::nullopt;  // both boundary
        if (f1 && f1->tet == T2 && f1->face == s2) return std::nullopt;  // glued to each other
    }
    // Flatten: outer faces pair via q: a1->a2, b1->b2, c1->c2, d1->d2.
    std::array<int, 4> img{};
    img[a1] = a2;
    img[b1] = b2;
    img[c1] = c2;
    img[d1] = d2;
    Perm4 q(img[0], img[1], img[2], img[3]);
    if (!q.valid()) return std::nullopt;
    std::vector<char> dead(t.size(), 0);
    dead[T1] = dead[T2] = 1;
    std::vector<FaceIdent> idents;
    idents.push_back(FaceIdent{T1, a1, T2, a2, q});
    idents.push_back(FaceIdent{T1, b1, T2, b2, q});
    auto fl = flatten_and_remove(t, dead, idents, false);
    if (!fl.valid) return std::nullopt;
    if (!result_clean(fl.tri)) return std::nullopt;
    return MoveResult{std::move(fl.tri), std::move(fl.face_origin), -1};
}

std::optional<MoveResult> shell_tetrahedron(const Triangulation& t, int tet) {
    if (tet < 0 || tet >= t.size()) return std::nullopt;
    Skeleton sk = make_skeleton(t);
    std::vector<int> free_faces, glued_faces;
    for (int f = 0; f < 4; ++f) {
        if (t.is_boundary_face(tet, f))
            free_faces.push_back(f);
        else
            glued_faces.push_back(f);
    }
    int nf = static_cast<int>(free_faces.size());
    if (nf < 1 || nf > 3) return std::nullopt;
    // Internal faces must lead to other tetrahedra.
    for (int f : glued_faces)
        if (t.gluing(tet, f)->tet == tet) return std::nullopt;

    if (nf == 1) {
        int f = free_faces[0];
        // Apex = vertex f; it and its three edges must be interior.
        if (sk.vertex_boundary[sk.vertex_class[4 * tet + f]]) return std::nullopt;
        for (int x = 0; x < 4; ++x) {
            if (x == f) continue;
            if (sk.edge_boundary[sk.edge_class[6 * tet + edge_index(f, x)]]) return std::nullopt;
        }
        // The three internal faces must be pairwise distinct classes.
        for (size_t i = 0; i < glued_faces.size(); ++i)
            for (size_t j = i + 1; j < glued_faces.size(); ++j)
                if (sk.face_class[4 * tet + glued_faces[i]] == sk.face_class[4 * tet + glued_faces[j]])
                    return std::nullopt;
        // The three apex edges must be pairwise distinct classes.
        std::array<int, 3> apex_edges{};
        int k = 0;
        for (int x = 0; x < 4; ++x)
            if (x != f) apex_edges[k++] = sk.edge_class[6 * tet + edge_index(f, x)];
        if (apex_edges[0] == apex_edges[1] || apex_edges[1] == apex_edges[2] || apex_edges[0] == apex_edges[2])
            return std::nullopt;
    } else if (nf == 2) {
        int f1 = free_faces[0], f2 = free_faces[1];
        // The edge joining the two apexes must be interior and the internal faces distinct.
        if (sk.edge_boundary[sk.edge_class[6 * tet + edge_index(f1, f2)]]) return std::nullopt;
        if (sk.face_class[4 * tet + glued_faces[0]] == sk.face_class[4 * tet + glued_faces[1]]) return std::nullopt;
        // The two free faces must be distinct in the boundary (always: distinct slots) and the
        // shared boundary edge's two sides must really be these two faces.
    } else {
        // nf == 3: nothing further; the single internal face leads elsewhere.
    }

    std::vector<char> dead(t.size(), 0);
    dead[tet] = 1;
    // Shelling has no identifications: internal partners simply become boundary.
    // flatten_and_remove would reject (dead tet without idents), so do it directly.
    int n = t.size();
    std::vector<int> renum(n, -1);
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (i != tet) renum[i] = m++;
    Triangulation out(m);
    std::vector<int> face_origin(4 * m, -1);
    for (int i = 0; i < n; ++i) {
        if (i == tet) continue;
        for (int f = 0; f < 4; ++f) {
            face_origin[4 * renum[i] + f] = 4 * i + f;
            const auto& g = t.gluing(i, f);
            if (!g || g->tet == tet) {
                if (g && g->tet == tet) {
                    // newly exposed face: descends from one of the removed free faces
                    face_origin[4 * renum[i] + f] = 4 * tet + free_faces[0];
                }
                continue;
            }
            if (out.gluing(renum[i], f)) continue;
            out.join(renum[i], f, renum[g->tet], g->face, g->perm);
        }
    }
    if (!result_clean(out)) return std::nullopt;
    return MoveResult{std::move(out), std::move(face_origin), -1};
}

std::optional<MoveResult> apply_move(const Triangulation& t, MoveKind kind, int location) {
    switch (kind) {
        case MoveKind::Fold: return close_book(t, location);
        case MoveKind::Layer: return layer_on_edge(t, location);
        case MoveKind::Pachner23: return pachner_23(t, location);
        case MoveKind::Pachner32: return pachner_32(t, location);
    }
    return std::nullopt;
}

}  // namespace cusped
