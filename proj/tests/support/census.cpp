#include "census.hpp"

#include <set>
#include <string>

#include "cusped/isosig.hpp"
#include "cusped/skeleton.hpp"

namespace cusped::testsupport {

namespace {

struct Generator {
    int n = 0;
    int cap = 0;
    Triangulation tri;
    std::set<std::string>* seen;
    std::vector<Triangulation>* out;

    bool full() const { return static_cast<int>(out->size()) >= cap; }

    void emit() {
        if (full()) return;
        if (!tri.is_connected()) return;
        if (!edges_valid(tri)) return;
        std::string sig = isosig_encode(tri);
        if (seen->insert(sig).second) out->push_back(isosig_decode(sig));
    }

    // First-use ordering: a gluing may only target tetrahedron k if 0..k-1 are already in use.
    // A gluing that first touches a fresh tetrahedron is normalized (same face, identity map);
    // every other labelling of the fresh tetrahedron gives an isomorphic result.
    void rec(int slot, int max_used) {
        if (full()) return;
        if (slot == 4 * n) {
            emit();
            return;
        }
        int t = slot / 4, f = slot % 4;
        if (tri.gluing(t, f)) {
            rec(slot + 1, max_used);
            return;
        }
        // Option 1: boundary face.
        rec(slot + 1, max_used);
        if (full()) return;
        // Option 2: glue to a later free slot of a tetrahedron already in use.
        for (int t2 = t; t2 <= std::min(n - 1, max_used); ++t2) {
            for (int f2 = (t2 == t ? f + 1 : 0); f2 < 4; ++f2) {
                if (tri.gluing(t2, f2)) continue;
                for (const Perm4& p : all_perm4_lex()) {
                    if (p[f] != f2) continue;
                    tri.join(t, f, t2, f2, p);
                    rec(slot + 1, max_used);
                    tri.unjoin(t, f);
                    if (full()) return;
                }
            }
        }
        // Option 3: open a fresh tetrahedron.
        if (max_used + 1 < n) {
            tri.join(t, f, max_used + 1, f, Perm4());
            rec(slot + 1, max_used + 1);
            tri.unjoin(t, f);
        }
    }
};

}  // namespace

std::vector<Triangulation> generate_census(int max_tets, int cap) {
    std::vector<Triangulation> out;
    std::set<std::string> seen;
    for (int n = 1; n <= max_tets && static_cast<int>(out.size()) < cap; ++n) {
        Generator g;
        g.n = n;
        g.cap = cap;
        g.tri = Triangulation(n);
        g.seen = &seen;
        g.out = &out;
        g.rec(0, 0);
    }
    return out;
}

const std::vector<Triangulation>& census_3tet(int cap) {
    static std::vector<Triangulation> cached = generate_census(3, cap);
    return cached;
}

}  // namespace cusped::testsupport
