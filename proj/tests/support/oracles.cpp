#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "cusped/nsurf.hpp"

namespace cusped::testsupport {

namespace {

// DFS over coordinates with interval pruning on each matching equation.
struct BoxSearch {
    const IntMatrix& rows;
    size_t dim;
    Int box;
    std::vector<Int> cur;
    std::vector<std::vector<Int>>* out;
    const Triangulation* tri;

    // For pruning: per row, the partial sum and the min/max achievable from the rest.
    std::vector<Int> partial;
    std::vector<std::vector<Int>> pos_tail, neg_tail;  // per row, per depth: achievable bounds

    void prepare() {
        size_t m = rows.size();
        partial.assign(m, 0);
        pos_tail.assign(m, std::vector<Int>(dim + 1, 0));
        neg_tail.assign(m, std::vector<Int>(dim + 1, 0));
        for (size_t r = 0; r < m; ++r)
            for (size_t i = dim; i-- > 0;) {
                pos_tail[r][i] = pos_tail[r][i + 1] + (rows[r][i] > 0 ? rows[r][i] * box : Int(0));
                neg_tail[r][i] = neg_tail[r][i + 1] + (rows[r][i] < 0 ? rows[r][i] * box : Int(0));
            }
    }

    bool feasible(size_t depth) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            if (partial[r] + pos_tail[r][depth] < 0) return false;
            if (partial[r] + neg_tail[r][depth] > 0) return false;
        }
        return true;
    }

    bool quad_ok(size_t depth_just_set) const {
        // Enforce at most one nonzero quad slot per tetrahedron as soon as a quad coord is set.
        size_t i = depth_just_set;
        size_t within = i % 7;
        if (within < 4) return true;
        size_t tet = i / 7;
        if (cur[i] == 0) return true;
        for (size_t q = 4; q < within; ++q)
            if (cur[7 * tet + q] != 0) return false;
        return true;
    }

    void rec(size_t depth) {
        if (depth == dim) {
            bool zero = true;
            for (const auto& x : cur)
                if (x != 0) zero = false;
            if (!zero) out->push_back(cur);
            return;
        }
        for (Int val = 0; val <= box; ++val) {
            cur[depth] = val;
            for (size_t r = 0; r < rows.size(); ++r) partial[r] += rows[r][depth] * val;
            if (quad_ok(depth) && feasible(depth + 1)) rec(depth + 1);
            for (size_t r = 0; r < rows.size(); ++r) partial[r] -= rows[r][depth] * val;
        }
        cur[depth] = 0;
    }
};

bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g == 1;
}

}  // namespace

std::vector<std::vector<Int>> admissible_solutions_in_box(const Triangulation& t, const Int& box) {
    IntMatrix rows = matching_matrix(t);
    BoxSearch s{rows, 7 * static_cast<size_t>(t.size()), box, {}, nullptr, &t, {}, {}, {}};
    std::vector<std::vector<Int>> out;
    s.cur.assign(s.dim, 0);
    s.out = &out;
    s.prepare();
    s.rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Int>> brute_force_vertex_rays(const Triangulation& t, const Int& box) {
    auto sols = admissible_solutions_in_box(t, box);
    IntMatrix rows = matching_matrix(t);
    size_t dim = 7 * static_cast<size_t>(t.size());
    std::vector<std::vector<Int>> out;
    for (const auto& v : sols) {
        if (!is_primitive(v)) continue;
        // Exact rank test: the solution space of {matching rows, coords zero on Z(v)} must be
        // one-dimensional. Build the stacked matrix and compare ranks.
        IntMatrix stacked = rows;
        for (size_t i = 0; i < dim; ++i) {
            if (v[i] == 0) {
                std::vector<Int> row(dim, 0);
                row[i] = 1;
                stacked.push_back(std::move(row));
            }
        }
        if (integer_rank(stacked) == static_cast<long long>(dim) - 1) out.push_back(v);
    }
    return out;
}

std::vector<std::vector<Int>> brute_force_fundamental(const Triangulation& t, const Int& box) {
    auto sols = admissible_solutions_in_box(t, box);
    // v is a minimal generator iff no admissible solution u with 0 < u < v (componentwise);
    // u <= v implies u admissible automatically (quad condition inherits from v).
    std::vector<std::vector<Int>> out;
    for (const auto& v : sols) {
        bool reducible = false;
        for (const auto& u : sols) {
            if (u == v) continue;
            bool le = true, lt = false;
            for (size_t i = 0; i < v.size(); ++i) {
                if (u[i] > v[i]) {
                    le = false;
                    break;
                }
                if (u[i] < v[i]) lt = true;
            }
            if (le && lt) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(v);
    }
    return out;
}

}  // namespace cusped::testsupport
