#include "cusped/simplify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cusped/homology.hpp"
#include "cusped/skeleton.hpp"

namespace cusped {

namespace {

std::vector<int> map_tags(const std::vector<int>& old_tags, const MoveResult& mv) {
    std::vector<int> tags(4 * mv.tri.size(), -1);
    for (int s = 0; s < 4 * mv.tri.size(); ++s) {
        if (!mv.tri.is_boundary_face(s / 4, s % 4)) continue;
        int origin = mv.face_origin[s];
        if (origin >= 0 && origin < static_cast<int>(old_tags.size())) tags[s] = old_tags[origin];
    }
    return tags;
}

// One pass of strictly-reducing moves; returns true if anything fired.
bool reduce_once(Triangulation& tri, std::vector<int>* tags) {
    Skeleton sk = make_skeleton(tri);
    for (int e = 0; e < sk.edge_count; ++e) {
        if (auto mv = pachner_32(tri, e)) {
            if (tags) *tags = map_tags(*tags, *mv);
            tri = std::move(mv->tri);
            return true;
        }
    }
    for (int e = 0; e < sk.edge_count; ++e) {
        if (auto mv = two_zero_edge(tri, e)) {
            if (tags) *tags = map_tags(*tags, *mv);
            tri = std::move(mv->tri);
            return true;
        }
    }
    for (int t = 0; t < tri.size(); ++t) {
        if (auto mv = shell_tetrahedron(tri, t)) {
            if (tags) *tags = map_tags(*tags, *mv);
            tri = std::move(mv->tri);
            return true;
        }
    }
    return false;
}

void reduce_cascade(Triangulation& tri, std::vector<int>* tags) {
    while (tri.size() > 1 && reduce_once(tri, tags)) {
    }
}

struct GreedyState {
    Triangulation tri;
    std::vector<int> tags;
    bool tagged = false;
};

void simplify_impl(GreedyState& st, int sideways_budget) {
    reduce_cascade(st.tri, st.tagged ? &st.tags : nullptr);
    std::set<std::string> visited;
    int budget = sideways_budget;
    while (budget > 0 && st.tri.size() > 1) {
        // Try every single 2-3 followed by a full cascade; take the first strict win.
        Skeleton sk = make_skeleton(st.tri);
        bool improved = false;
        for (int f = 0; f < sk.face_count && !improved; ++f) {
            auto mv = pachner_23(st.tri, f);
            if (!mv) continue;
            GreedyState trial{mv->tri, st.tagged ? map_tags(st.tags, *mv) : std::vector<int>{}, st.tagged};
            reduce_cascade(trial.tri, trial.tagged ? &trial.tags : nullptr);
            if (trial.tri.size() < st.tri.size()) {
                st = std::move(trial);
                improved = true;
            }
        }
        if (improved) continue;
        // Sideways: take the first applicable 2-3 leading somewhere new, cascade, and keep
        // going; the visited set prevents cycling.
        if (st.tri.is_connected()) visited.insert(isosig_encode(st.tri));
        bool moved = false;
        for (int f = 0; f < sk.face_count && !moved; ++f) {
            auto mv = pachner_23(st.tri, f);
            if (!mv) continue;
            GreedyState trial{mv->tri, st.tagged ? map_tags(st.tags, *mv) : std::vector<int>{}, st.tagged};
            reduce_cascade(trial.tri, trial.tagged ? &trial.tags : nullptr);
            if (trial.tri.size() > st.tri.size() + 1) continue;
            if (trial.tri.is_connected() && visited.count(isosig_encode(trial.tri))) continue;
            st = std::move(trial);
            moved = true;
        }
        if (!moved) break;
        --budget;
    }
}

}  // namespace

TaggedTriangulation TaggedTriangulation::from_boundary_components(const Triangulation& t) {
    TaggedTriangulation out;
    out.tri = t;
    Skeleton sk = make_skeleton(t);
    out.face_tag.assign(4 * t.size(), -1);
    for (int s = 0; s < 4 * t.size(); ++s)
        if (t.is_boundary_face(s / 4, s % 4)) out.face_tag[s] = sk.boundary_component_of_face[s];
    return out;
}

Triangulation simplify_greedy(const Triangulation& t, int sideways_budget) {
    GreedyState st{t, {}, false};
    simplify_impl(st, sideways_budget);
    return st.tri;
}

TaggedTriangulation simplify_greedy_tagged(const TaggedTriangulation& t, int sideways_budget) {
    GreedyState st{t.tri, t.face_tag, true};
    simplify_impl(st, sideways_budget);
    return TaggedTriangulation{st.tri, st.tags};
}

bool greedy_ball_check(const Triangulation& t, int sideways_budget) {
    if (t.empty()) return false;
    if (!t.is_connected()) return false;
    Skeleton sk = make_skeleton(t);
    if (!sk.is_material()) return false;
    if (sk.boundary.size() != 1 || sk.boundary[0].euler != 2) return false;
    if (!homology_h1(t, sk).is_trivial()) return false;
    if (!orientation_signs(t).has_value()) return false;
    Triangulation s = simplify_greedy(t, sideways_budget);
    if (s.size() != 1) return false;
    Skeleton sks = make_skeleton(s);
    return sks.boundary.size() == 1 && sks.boundary[0].euler == 2 && homology_h1(s, sks).is_trivial();
}

CloseCuspsResult close_cusps(const Triangulation& t) {
    if (!t.is_valid()) throw std::runtime_error("close_cusps: invalid triangulation");
    if (!t.is_connected()) throw std::runtime_error("close_cusps: triangulation must be connected");

    CloseCuspsResult res;
    res.tri = t;
    if (t.is_closed()) return res;

    auto canonical_edge_index = [](const Triangulation& tri, int tet, int a, int b) {
        LabelledTriangulation lab = canonical_labelling(tri);
        std::vector<int> image(tri.size());
        for (int i = 0; i < tri.size(); ++i) image[lab.tet_order[i]] = i;
        int ct = image[tet];
        int ce = edge_index(lab.corner_perm[tet][a], lab.corner_perm[tet][b]);
        return make_skeleton(lab.tri).edge_class[6 * ct + ce];
    };

    // A component with euler characteristic chi and F triangles has F/2 + chi corner
    // orbits, so the fewest orbits compatible with a triangulated surface is chi + 1
    // (one triangle pair), except that chi = 2 forces three. One orbit means one vertex.
    auto orbit_target = [](int chi) { return chi == 2 ? 3 : std::max(1, chi + 1); };

    int start_size = t.size();
    while (true) {
        Skeleton sk = make_skeleton(res.tri);
        const auto& bs = sk.boundary_surface;
        std::vector<char> busy(sk.boundary.size(), 0);
        bool any = false;
        for (size_t c = 0; c < sk.boundary.size(); ++c)
            if (sk.boundary[c].corner_orbits > orbit_target(sk.boundary[c].euler)) {
                busy[c] = 1;
                any = true;
            }
        if (!any) break;

        // Candidate boundary edges of the busy components, one per class.
        struct Cand {
            int edge_class;
            int tet, a, b;  // representative slot
        };
        std::vector<Cand> cands;
        std::vector<char> seen_class(sk.edge_count, 0);
        for (int tt = 0; tt < res.tri.size(); ++tt)
            for (int f = 0; f < 4; ++f) {
                if (!res.tri.is_boundary_face(tt, f)) continue;
                if (!busy[sk.boundary_component_of_face[4 * tt + f]]) continue;
                for (int e = 0; e < 6; ++e) {
                    int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
                    if (a == f || b == f) continue;
                    int cls = sk.edge_class[6 * tt + e];
                    if (seen_class[cls]) continue;
                    seen_class[cls] = 1;
                    cands.push_back({cls, tt, a, b});
                }
            }

        bool progressed = false;
        // Direct folds (the legality test inside close_book already demands that the fold
        // merges two distinct corner orbits).
        for (const auto& c : cands) {
            auto mv = close_book(res.tri, c.edge_class);
            if (!mv) continue;
            res.proof.steps.push_back(
                {isosig_encode(res.tri), canonical_edge_index(res.tri, c.tet, c.a, c.b), MoveKind::Fold});
            res.tri = std::move(mv->tri);
            progressed = true;
            break;
        }
        if (progressed) continue;

        // Layer over an edge whose endpoints lie in distinct corner orbits, then fold the
        // fresh diagonal; the pair merges those two orbits at the cost of one tetrahedron.
        for (const auto& c : cands) {
            auto sides = boundary_sides_of_edge(res.tri, sk, c.edge_class);
            if (!sides) continue;
            int fa = bs.index_of_slot[4 * sides->tet_a + sides->face_a];
            int oa = bs.corner_orbit[fa][bs.local_corner(fa, sides->a1, sides->face_a)];
            int ob = bs.corner_orbit[fa][bs.local_corner(fa, sides->b1, sides->face_a)];
            if (oa == ob) continue;
            auto mv = layer_on_edge(res.tri, c.edge_class);
            if (!mv) continue;
            Triangulation layered = mv->tri;
            int L = layered.size() - 1;
            // The fresh diagonal is edge {0,1} of the layered tetrahedron.
            Skeleton sk2 = make_skeleton(layered);
            int diag = sk2.edge_class[6 * L + edge_index(0, 1)];
            auto fold = close_book(layered, diag);
            if (!fold) continue;
            res.proof.steps.push_back(
                {isosig_encode(res.tri), canonical_edge_index(res.tri, c.tet, c.a, c.b), MoveKind::Layer});
            res.proof.steps.push_back({isosig_encode(layered), canonical_edge_index(layered, L, 0, 1), MoveKind::Fold});
            res.tri = std::move(fold->tri);
            progressed = true;
            break;
        }
        if (!progressed) throw std::runtime_error("close_cusps: no legal fold or layer available");
    }

    if (!res.proof.steps.empty()) res.proof.steps.push_back({isosig_encode(res.tri), 0, std::nullopt});
    res.tetrahedra_added = res.tri.size() - start_size;
    return res;
}

}  // namespace cusped
