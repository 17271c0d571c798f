#include "cusped/isosig.hpp"

#include <algorithm>
#include <sstream>

namespace cusped {

namespace {

constexpr char kSigChars[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int sig_val(char c) {
    for (int i = 0; i < 64; ++i)
        if (kSigChars[i] == c) return i;
    return -1;
}

void append_size(std::string& s, size_t n) {
    if (n < 63) {
        s += kSigChars[n];
        return;
    }
    int chars = 0;
    size_t tmp = n;
    while (tmp > 0) {
        tmp >>= 6;
        ++chars;
    }
    s += kSigChars[63];
    s += kSigChars[chars];
    for (int i = 0; i < chars; ++i) {
        s += kSigChars[n & 63];
        n >>= 6;
    }
}

int dest_chars_for(size_t n) {
    if (n < 63) return 1;
    int chars = 0;
    while (n > 0) {
        n >>= 6;
        ++chars;
    }
    return chars;
}

struct EncodeScratch {
    std::vector<int> image;         // old tet -> new label
    std::vector<Perm4> vertex_map;  // old tet -> old labels -> new labels
    std::vector<int> pre_image;
    std::vector<char> processed;
    std::vector<int> actions;
    std::vector<int> join_dest;
    std::vector<int> join_gluing;
    std::string sig;
};

void encode_from(const Triangulation& t, int start, const Perm4& vperm, EncodeScratch& sc) {
    int n = t.size();
    sc.image.assign(n, -1);
    sc.vertex_map.assign(n, Perm4());
    sc.pre_image.assign(n, -1);
    sc.processed.assign(4 * n, 0);
    sc.actions.clear();
    sc.join_dest.clear();
    sc.join_gluing.clear();

    sc.image[start] = 0;
    sc.vertex_map[start] = vperm;
    sc.pre_image[0] = start;
    int next_label = 1;

    for (int simp_img = 0; simp_img < n; ++simp_img) {
        int src = sc.pre_image[simp_img];
        if (src < 0) throw std::runtime_error("isosig: triangulation is disconnected");
        for (int facet_img = 0; facet_img < 4; ++facet_img) {
            int facet_src = sc.vertex_map[src].pre_image_of(facet_img);
            if (sc.processed[4 * src + facet_src]) continue;
            const auto& g = t.gluing(src, facet_src);
            if (!g) {
                sc.actions.push_back(0);
                sc.processed[4 * src + facet_src] = 1;
                continue;
            }
            sc.processed[4 * src + facet_src] = 1;
            sc.processed[4 * g->tet + g->face] = 1;
            if (sc.image[g->tet] < 0) {
                sc.actions.push_back(1);
                sc.image[g->tet] = next_label;
                sc.pre_image[next_label] = g->tet;
                ++next_label;
                sc.vertex_map[g->tet] = sc.vertex_map[src] * g->perm.inverse();
            } else {
                sc.actions.push_back(2);
                sc.join_dest.push_back(sc.image[g->tet]);
                Perm4 G = sc.vertex_map[g->tet] * g->perm * sc.vertex_map[src].inverse();
                sc.join_gluing.push_back(G.lex_index());
            }
        }
    }

    std::string& s = sc.sig;
    s.clear();
    append_size(s, static_cast<size_t>(n));
    for (size_t i = 0; i < sc.actions.size(); i += 3) {
        int val = sc.actions[i];
        if (i + 1 < sc.actions.size()) val |= sc.actions[i + 1] << 2;
        if (i + 2 < sc.actions.size()) val |= sc.actions[i + 2] << 4;
        s += kSigChars[val];
    }
    int dchars = dest_chars_for(static_cast<size_t>(n));
    for (int dv : sc.join_dest) {
        size_t d = static_cast<size_t>(dv);
        for (int i = 0; i < dchars; ++i) {
            s += kSigChars[d & 63];
            d >>= 6;
        }
    }
    for (int gi : sc.join_gluing) s += kSigChars[gi];
}

}  // namespace

std::string isosig_encode(const Triangulation& t) {
    if (!t.is_connected()) throw std::runtime_error("isosig: triangulation is disconnected");
    if (t.empty()) return std::string(1, kSigChars[0]);
    thread_local EncodeScratch sc;
    std::string best;
    for (int start = 0; start < t.size(); ++start)
        for (const Perm4& p : all_perm4_lex()) {
            encode_from(t, start, p, sc);
            if (best.empty() || sc.sig < best) best = sc.sig;
        }
    return best;
}

LabelledTriangulation canonical_labelling(const Triangulation& t) {
    if (!t.is_valid()) throw std::runtime_error("isosig: invalid triangulation");
    if (!t.is_connected()) throw std::runtime_error("isosig: triangulation is disconnected");
    if (t.empty()) {
        LabelledTriangulation lab;
        lab.signature = std::string(1, kSigChars[0]);
        return lab;
    }
    thread_local EncodeScratch sc;
    std::string best;
    std::vector<int> best_image;
    std::vector<Perm4> best_map;
    for (int start = 0; start < t.size(); ++start)
        for (const Perm4& p : all_perm4_lex()) {
            encode_from(t, start, p, sc);
            if (best.empty() || sc.sig < best) {
                best = sc.sig;
                best_image = sc.image;
                best_map = sc.vertex_map;
            }
        }
    LabelledTriangulation lab;
    lab.signature = best;
    lab.corner_perm = best_map;
    lab.tet_order.assign(t.size(), -1);
    for (int i = 0; i < t.size(); ++i) lab.tet_order[best_image[i]] = i;
    lab.tri = t.relabel(best_image, best_map);
    return lab;
}

Triangulation isosig_decode(const std::string& sig) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > sig.size()) throw IsosigError(sig.size(), "isosig: unexpected end of string");
    };
    auto take = [&]() {
        need(1);
        int v = sig_val(sig[pos]);
        if (v < 0) throw IsosigError(pos, "isosig: bad character");
        ++pos;
        return v;
    };

    need(1);
    size_t n;
    {
        int first = take();
        if (first < 63) {
            n = static_cast<size_t>(first);
        } else {
            int chars = take();
            if (chars <= 0 || chars > 8) throw IsosigError(pos - 1, "isosig: bad size width");
            n = 0;
            for (int i = 0; i < chars; ++i) n |= static_cast<size_t>(take()) << (6 * i);
        }
    }
    if (n == 0) {
        if (pos != sig.size()) throw IsosigError(pos, "isosig: trailing characters");
        return Triangulation();
    }

    // Facet actions: boundary accounts for one facet, joins for two.
    std::vector<int> actions;
    {
        size_t facets = 0;
        while (facets < 4 * n) {
            int val = take();
            for (int i = 0; i < 3 && facets < 4 * n; ++i) {
                int a = (val >> (2 * i)) & 3;
                if (a == 3) throw IsosigError(pos - 1, "isosig: bad facet action");
                actions.push_back(a);
                facets += (a == 0) ? 1 : 2;
            }
            if (facets > 4 * n) throw IsosigError(pos - 1, "isosig: facet actions overrun");
        }
    }
    size_t joins2 = static_cast<size_t>(std::count(actions.begin(), actions.end(), 2));
    int dchars = dest_chars_for(n);
    std::vector<size_t> dest(joins2, 0);
    for (size_t j = 0; j < joins2; ++j)
        for (int i = 0; i < dchars; ++i) dest[j] |= static_cast<size_t>(take()) << (6 * i);
    std::vector<int> glu(joins2, 0);
    for (size_t j = 0; j < joins2; ++j) {
        size_t at = pos;
        glu[j] = take();
        if (glu[j] >= 24) throw IsosigError(at, "isosig: permutation index out of range");
    }
    if (pos != sig.size()) throw IsosigError(pos, "isosig: trailing characters");

    Triangulation t(static_cast<int>(n));
    size_t next_label = 1, ai = 0, ji = 0;
    for (size_t cur = 0; cur < n; ++cur) {
        for (int f = 0; f < 4; ++f) {
            if (t.gluing(static_cast<int>(cur), f)) continue;
            if (ai >= actions.size()) throw IsosigError(sig.size(), "isosig: facet actions exhausted");
            int a = actions[ai++];
            if (a == 0) continue;
            if (a == 1) {
                if (next_label >= n) throw IsosigError(sig.size(), "isosig: too many new tetrahedra");
                t.join(static_cast<int>(cur), f, static_cast<int>(next_label), f, Perm4());
                ++next_label;
            } else {
                if (ji >= joins2) throw IsosigError(sig.size(), "isosig: joins exhausted");
                size_t d = dest[ji];
                Perm4 p = Perm4::from_lex_index(glu[ji]);
                ++ji;
                if (d >= next_label) throw IsosigError(sig.size(), "isosig: join destination not yet labelled");
                int df = p[f];
                if (t.gluing(static_cast<int>(d), df))
                    throw IsosigError(sig.size(), "isosig: join destination already glued");
                if (d == cur && df == f) throw IsosigError(sig.size(), "isosig: face joined to itself");
                t.join(static_cast<int>(cur), f, static_cast<int>(d), df, p);
            }
        }
    }
    if (ai != actions.size() || ji != joins2) throw IsosigError(sig.size(), "isosig: leftover data");
    if (next_label != n) throw IsosigError(sig.size(), "isosig: disconnected signature");
    return t;
}

std::string SimplificationProof::serialize() const {
    std::ostringstream os;
    for (const auto& s : steps)
        os << s.isosig << ' ' << s.location << ' ' << (s.move ? move_kind_name(*s.move) : "none") << '\n';
    return os.str();
}

SimplificationProof SimplificationProof::deserialize(const std::string& text) {
    SimplificationProof p;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        bool blank = true;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        std::istringstream ls(line);
        ProofStep st;
        std::string mv;
        if (!(ls >> st.isosig >> st.location >> mv)) throw std::runtime_error("proof: bad step line");
        if (mv != "none") {
            auto k = move_kind_from_name(mv);
            if (!k) throw std::runtime_error("proof: unknown move " + mv);
            st.move = k;
        }
        p.steps.push_back(std::move(st));
    }
    return p;
}

ProofCheck verify_simplification_proof(const Triangulation& t0, const SimplificationProof& proof,
                                       const Triangulation& t1) {
    std::string sig0, sig1;
    try {
        sig0 = isosig_encode(t0);
        sig1 = isosig_encode(t1);
    } catch (const std::exception& e) {
        return {false, -1, e.what()};
    }
    if (proof.steps.empty()) {
        if (sig0 == sig1) return {true, -1, ""};
        return {false, 0, "empty proof but signatures differ"};
    }
    if (proof.steps.front().isosig != sig0) return {false, 0, "first step does not match the source"};
    for (size_t i = 0; i + 1 < proof.steps.size(); ++i) {
        const auto& st = proof.steps[i];
        if (!st.move) return {false, static_cast<int>(i), "missing move tag"};
        Triangulation cur;
        try {
            cur = isosig_decode(st.isosig);
        } catch (const std::exception& e) {
            return {false, static_cast<int>(i), e.what()};
        }
        auto moved = apply_move(cur, *st.move, st.location);
        if (!moved) return {false, static_cast<int>(i), "move not applicable at location"};
        std::string next = isosig_encode(moved->tri);
        if (next != proof.steps[i + 1].isosig) return {false, static_cast<int>(i), "move result mismatch"};
    }
    if (proof.steps.back().isosig != sig1)
        return {false, static_cast<int>(proof.steps.size()) - 1, "last step does not match the target"};
    return {true, -1, ""};
}

}  // namespace cusped
