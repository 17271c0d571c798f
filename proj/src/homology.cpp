#include "cusped/homology.hpp"

#include <algorithm>

#include "cusped/truncate.hpp"
#include <sstream>
#include <stdexcept>

namespace cusped {

std::string HomologyGroup::str() const {
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const auto& d : torsion_divisors) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// In-place fraction-free elimination is awkward for SNF; use classical reduction.
void snf_reduce(IntMatrix& m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // Find a pivot: smallest nonzero magnitude in the remaining block.
        size_t pr = rows, pc = cols;
        Int best = 0;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = c; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Int a = abs(m[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;  // all zero
        std::swap(m[r], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) {
                    std::swap(m[r], m[i]);
                    clean = false;
                }
            }
            for (size_t j = c + 1; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                Int q = m[r][j] / m[r][c];
                for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
                if (m[r][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
                    clean = false;
                }
            }
        }
        // Divisibility pass: pivot must divide the rest of the block.
        bool redo = false;
        for (size_t i = r + 1; i < rows && !redo; ++i)
            for (size_t j = c + 1; j < cols && !redo; ++j)
                if (m[i][j] % m[r][c] != 0) {
                    for (size_t jj = c; jj < cols; ++jj) m[r][jj] += m[i][jj];
                    redo = true;
                }
        if (redo) continue;
        if (m[r][c] < 0)
            for (size_t j = c; j < cols; ++j) m[r][j] = -m[r][j];
        ++r;
        ++c;
    }
}

}  // namespace

std::vector<Int> smith_invariants(IntMatrix m) {
    snf_reduce(m);
    std::vector<Int> out;
    size_t n = std::min(m.size(), m.empty() ? size_t{0} : m[0].size());
    for (size_t i = 0; i < n; ++i) {
        if (m[i][i] == 0) break;
        out.push_back(m[i][i]);
    }
    return out;
}

long long integer_rank(const IntMatrix& m) { return static_cast<long long>(smith_invariants(m).size()); }

bool in_integer_column_span(const IntMatrix& m, const std::vector<Int>& z) {
    // Solve m*x = z over Z: row-reduce the augmented system via SNF-style column ops on m only.
    // Simple approach: Hermite-like elimination over rows with full bookkeeping is more code than
    // needed here; instead use the classical trick rank/augment + divisibility via SNF of m with
    // transforms. Implement directly with transforms.
    size_t rows = m.size();
    if (rows == 0) {
        for (const auto& v : z)
            if (v != 0) return false;
        return true;
    }
    size_t cols = m[0].size();
    IntMatrix a = m;
    // U tracks row operations applied to the identity: after reduction D = U * m * V.
    IntMatrix u(rows, std::vector<Int>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        size_t pr = rows, pc = cols;
        Int best = 0;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = c; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Int ab = abs(a[i][j]);
                if (best == 0 || ab < best) {
                    best = ab;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;
        std::swap(a[r], a[pr]);
        std::swap(u[r], u[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
                if (a[i][c] != 0) {
                    std::swap(a[r], a[i]);
                    std::swap(u[r], u[i]);
                    clean = false;
                }
            }
            for (size_t j = c + 1; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                Int q = a[r][j] / a[r][c];
                for (size_t i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
                if (a[r][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][j]);
                    clean = false;
                }
            }
        }
        ++r;
        ++c;
    }
    // a is now diagonal-ish up to rank r (no divisibility chain needed for solvability).
    std::vector<Int> w(rows, 0);
    for (size_t i = 0; i < rows; ++i) {
        Int s = 0;
        for (size_t j = 0; j < rows; ++j) s += u[i][j] * z[j];
        w[i] = s;
    }
    for (size_t i = 0; i < r; ++i) {
        if (w[i] % a[i][i] != 0) return false;
    }
    for (size_t i = r; i < rows; ++i)
        if (w[i] != 0) return false;
    return true;
}

void boundary_maps(const Triangulation&, const Skeleton& sk, IntMatrix& d1, IntMatrix& d2) {
    d1.assign(sk.vertex_count, std::vector<Int>(sk.edge_count, 0));
    for (int e = 0; e < sk.edge_count; ++e) {
        int slot = sk.edge_rep[e];
        int tet = slot / 6, ei = slot % 6;
        int a = kEdgeVertices[ei][0], b = kEdgeVertices[ei][1];  // directed a -> b
        int va = sk.vertex_class[4 * tet + a];
        int vb = sk.vertex_class[4 * tet + b];
        d1[vb][e] += 1;
        d1[va][e] -= 1;
    }
    d2.assign(sk.edge_count, std::vector<Int>(sk.face_count, 0));
    for (int f = 0; f < sk.face_count; ++f) {
        int slot = sk.face_rep[f];
        int tet = slot / 4, fi = slot % 4;
        std::array<int, 3> v{};
        int k = 0;
        for (int x = 0; x < 4; ++x)
            if (x != fi) v[k++] = x;
        // Face oriented (v0, v1, v2): boundary = [v0v1] + [v1v2] - [v0v2].
        auto add_edge = [&](int x, int y, int coeff) {
            int ei = edge_index(x, y);
            int eslot = 6 * tet + ei;
            int cls = sk.edge_class[eslot];
            int par = sk.edge_parity[eslot];  // 1 means slot direction reversed vs representative
            d2[cls][f] += (par ? -coeff : coeff);
        };
        add_edge(v[0], v[1], 1);
        add_edge(v[1], v[2], 1);
        add_edge(v[0], v[2], -1);
    }
}

HomologyGroup homology_h1(const Triangulation& t) { return homology_h1(t, make_skeleton(t)); }

HomologyGroup homology_h1(const Triangulation& t, const Skeleton& sk) {
    if (!sk.is_material()) return homology_h1(materialize(t));
    IntMatrix d1, d2;
    boundary_maps(t, sk, d1, d2);
    long long r1 = integer_rank(d1);
    auto inv2 = smith_invariants(d2);
    long long r2 = static_cast<long long>(inv2.size());
    HomologyGroup h;
    h.rank = static_cast<int>(sk.edge_count - r1 - r2);
    for (const auto& d : inv2) {
        Int a = abs(d);
        if (a >= 2) h.torsion_divisors.push_back(a);
    }
    std::sort(h.torsion_divisors.begin(), h.torsion_divisors.end());
    return h;
}

Int cycle_order_in_h1(const IntMatrix& d2, const std::vector<Int>& z) {
    if (in_integer_column_span(d2, z)) return 1;
    // Finite order m > 1 iff m*z lies in the span; infinite iff z is independent over Q.
    // Rank test for rational dependence:
    IntMatrix aug = d2;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(z[i]);
    if (integer_rank(aug) > integer_rank(d2)) return 0;  // infinite order
    for (Int m = 2;; ++m) {
        std::vector<Int> mz(z.size());
        for (size_t i = 0; i < z.size(); ++i) mz[i] = m * z[i];
        if (in_integer_column_span(d2, mz)) return m;
        if (m > 4096) throw std::runtime_error("cycle_order_in_h1: order search exceeded bound");
    }
}

}  // namespace cusped
