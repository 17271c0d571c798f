#include "cusped/perm4.hpp"

#include <algorithm>

namespace cusped {

namespace {

std::array<Perm4, 24> build_lex_table() {
    std::array<int, 4> v{0, 1, 2, 3};
    std::array<Perm4, 24> out;
    int n = 0;
    do {
        out[n++] = Perm4(v[0], v[1], v[2], v[3]);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

const std::array<Perm4, 24>& all_perm4_lex() {
    static const std::array<Perm4, 24> table = build_lex_table();
    return table;
}

int Perm4::lex_index() const {
    const auto& t = all_perm4_lex();
    for (int i = 0; i < 24; ++i)
        if (t[i] == *this) return i;
    return -1;
}

Perm4 Perm4::from_lex_index(int idx) { return all_perm4_lex()[idx]; }

Perm4 transposition(int a, int b) {
    Perm4 p;
    std::array<int, 4> v{0, 1, 2, 3};
    std::swap(v[a], v[b]);
    return Perm4(v[0], v[1], v[2], v[3]);
}

}  // namespace cusped
