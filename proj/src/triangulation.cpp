#include "cusped/triangulation.hpp"

#include <sstream>
#include <stdexcept>

namespace cusped {

void Triangulation::join(int tet, int face, int dst_tet, int dst_face, const Perm4& perm) {
    if (glue_[tet][face] || glue_[dst_tet][dst_face])
        throw std::runtime_error("join: face already glued");
    if (perm[face] != dst_face) throw std::runtime_error("join: permutation does not map face to face");
    glue_[tet][face] = Gluing{dst_tet, dst_face, perm};
    glue_[dst_tet][dst_face] = Gluing{tet, face, perm.inverse()};
}

void Triangulation::unjoin(int tet, int face) {
    if (!glue_[tet][face]) return;
    Gluing g = *glue_[tet][face];
    glue_[g.tet][g.face].reset();
    glue_[tet][face].reset();
}

std::vector<Diagnostic> Triangulation::validate() const {
    std::vector<Diagnostic> out;
    for (int t = 0; t < size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = glue_[t][f];
            if (!g) continue;
            if (g->tet < 0 || g->tet >= size() || g->face < 0 || g->face > 3) {
                out.push_back({t, f, "gluing target out of range"});
                return out;
            }
            if (!g->perm.valid()) {
                out.push_back({t, f, "gluing permutation is not a bijection"});
                return out;
            }
            if (g->perm[f] != g->face) {
                out.push_back({t, f, "gluing permutation does not carry the face to its partner"});
                return out;
            }
            if (g->tet == t && g->face == f && g->perm.is_identity()) {
                out.push_back({t, f, "face glued to itself pointwise"});
                return out;
            }
            const auto& back = glue_[g->tet][g->face];
            if (!back || back->tet != t || back->face != f || !(back->perm == g->perm.inverse())) {
                out.push_back({t, f, "gluing map is not involutive"});
                return out;
            }
        }
    }
    return out;
}

bool Triangulation::is_connected() const {
    if (empty()) return true;
    std::vector<char> seen(size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const auto& g = glue_[t][f];
            if (g && !seen[g->tet]) {
                seen[g->tet] = 1;
                ++found;
                stack.push_back(g->tet);
            }
        }
    }
    return found == size();
}

bool Triangulation::is_closed() const { return boundary_face_count() == 0; }

int Triangulation::boundary_face_count() const {
    int n = 0;
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (!glue_[t][f]) ++n;
    return n;
}

std::vector<Triangulation> Triangulation::components() const {
    std::vector<int> comp(size(), -1);
    int ncomp = 0;
    for (int s = 0; s < size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = glue_[t][f];
                if (g && comp[g->tet] < 0) {
                    comp[g->tet] = ncomp;
                    stack.push_back(g->tet);
                }
            }
        }
        ++ncomp;
    }
    std::vector<Triangulation> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> local(size(), -1);
        int n = 0;
        for (int t = 0; t < size(); ++t)
            if (comp[t] == c) local[t] = n++;
        Triangulation piece(n);
        for (int t = 0; t < size(); ++t) {
            if (comp[t] != c) continue;
            for (int f = 0; f < 4; ++f) {
                const auto& g = glue_[t][f];
                if (!g) continue;
                piece.glue_[local[t]][f] = Gluing{local[g->tet], g->face, g->perm};
            }
        }
        out.push_back(std::move(piece));
    }
    return out;
}

Triangulation Triangulation::relabel(const std::vector<int>& new_index, const std::vector<Perm4>& corner_perm) const {
    Triangulation out(size());
    for (int t = 0; t < size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = glue_[t][f];
            if (!g) continue;
            int nt = new_index[t];
            int nf = corner_perm[t][f];
            Perm4 np = corner_perm[g->tet] * g->perm * corner_perm[t].inverse();
            out.glue_[nt][nf] = Gluing{new_index[g->tet], np[nf], np};
        }
    }
    return out;
}

std::string Triangulation::gluing_table() const {
    std::ostringstream os;
    for (int t = 0; t < size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            if (f) os << ' ';
            const auto& g = glue_[t][f];
            if (!g)
                os << "bdry";
            else
                os << g->tet << '(' << g->perm.str()[0] << ' ' << g->perm.str()[1] << ' ' << g->perm.str()[2] << ' '
                   << g->perm.str()[3] << ')';
        }
        os << '\n';
    }
    return os.str();
}

Triangulation Triangulation::from_gluing_table(const std::string& text) {
    // One line per tetrahedron; entries are `t(p0 p1 p2 p3)` or `bdry`; `#` starts a comment.
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            bool blank = true;
            for (char c : line)
                if (!isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) lines.push_back(line);
        }
    }
    struct Entry {
        bool bdry;
        int tet;
        Perm4 perm;
    };
    std::vector<std::array<Entry, 4>> rows;
    for (const auto& line : lines) {
        std::istringstream is(line);
        std::array<Entry, 4> row;
        for (int f = 0; f < 4; ++f) {
            std::string tok;
            if (!(is >> tok)) throw std::runtime_error("gluing table: short line");
            if (tok == "bdry") {
                row[f] = Entry{true, -1, Perm4()};
                continue;
            }
            auto paren = tok.find('(');
            if (paren == std::string::npos) throw std::runtime_error("gluing table: expected `tet(perm)` or `bdry`");
            int tet = std::stoi(tok.substr(0, paren));
            std::string rest = tok.substr(paren + 1);
            // The permutation digits may be separated by spaces; pull from the stream until ')'.
            while (rest.find(')') == std::string::npos) {
                std::string more;
                if (!(is >> more)) throw std::runtime_error("gluing table: unterminated permutation");
                rest += more;
            }
            std::string digits;
            for (char c : rest) {
                if (c == ')') break;
                if (!isspace(static_cast<unsigned char>(c))) digits += c;
            }
            if (digits.size() != 4) throw std::runtime_error("gluing table: permutation needs 4 entries");
            std::array<int, 4> img;
            for (int i = 0; i < 4; ++i) {
                if (digits[i] < '0' || digits[i] > '3') throw std::runtime_error("gluing table: bad permutation digit");
                img[i] = digits[i] - '0';
            }
            Perm4 p(img[0], img[1], img[2], img[3]);
            if (!p.valid()) throw std::runtime_error("gluing table: permutation is not a bijection");
            row[f] = Entry{false, tet, p};
        }
        std::string extra;
        if (is >> extra) throw std::runtime_error("gluing table: trailing tokens");
        rows.push_back(row);
    }
    Triangulation tri(static_cast<int>(rows.size()));
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const Entry& e = rows[t][f];
            if (e.bdry) continue;
            if (e.tet < 0 || e.tet >= tri.size()) throw std::runtime_error("gluing table: tetrahedron index out of range");
            tri.glue_[t][f] = Gluing{e.tet, e.perm[f], e.perm};
        }
    }
    auto diags = tri.validate();
    if (!diags.empty()) throw std::runtime_error("gluing table: " + diags.front().message);
    return tri;
}

}  // namespace cusped
