#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "census.hpp"
#include "cusped/isosig.hpp"
#include "cusped/skeleton.hpp"

using namespace cusped;

namespace {

Triangulation random_relabel(const Triangulation& t, std::mt19937_64& rng) {
    std::vector<int> order(t.size());
    for (int i = 0; i < t.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> new_index(t.size());
    for (int i = 0; i < t.size(); ++i) new_index[order[i]] = i;
    std::vector<Perm4> perms(t.size());
    std::uniform_int_distribution<int> d(0, 23);
    for (auto& p : perms) p = Perm4::from_lex_index(d(rng));
    return t.relabel(new_index, perms);
}

}  // namespace

TEST_CASE("lone tetrahedron signature round trip") {
    Triangulation t(1);
    std::string sig = isosig_encode(t);
    CHECK(sig == "baa");
    Triangulation u = isosig_decode(sig);
    CHECK(u.size() == 1);
    CHECK(u.boundary_face_count() == 4);
    CHECK(isosig_encode(u) == sig);
}

TEST_CASE("figure eight signature is canonical") {
    Triangulation t = isosig_decode("cPcbbbiht");
    CHECK(isosig_encode(t) == "cPcbbbiht");
}

TEST_CASE("decode rejects malformed strings with positions") {
    CHECK_THROWS_AS(isosig_decode(""), IsosigError);
    CHECK_THROWS_AS(isosig_decode("c"), IsosigError);
    CHECK_THROWS_AS(isosig_decode("cPcbbbih"), IsosigError);
    CHECK_THROWS_AS(isosig_decode("cPcbbbiht!"), IsosigError);
    CHECK_THROWS_AS(isosig_decode("cPcbbbihtz"), IsosigError);
    try {
        isosig_decode("cPcb!bbiht");
    } catch (const IsosigError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("signature invariance under relabelling") {
    std::mt19937_64 rng(20240801);
    for (const char* sig : {"cPcbbbiht", "baa"}) {
        Triangulation t = isosig_decode(sig);
        for (int i = 0; i < 1000; ++i) {
            Triangulation u = random_relabel(t, rng);
            CHECK(isosig_encode(u) == sig);
        }
    }
}

TEST_CASE("decode encode identity on small census") {
    auto census = cusped::testsupport::generate_census(2, 500);
    std::mt19937_64 rng(7);
    int n = 0;
    for (const auto& t : census) {
        std::string sig = isosig_encode(t);
        Triangulation u = isosig_decode(sig);
        CHECK(isosig_encode(u) == sig);
        Triangulation r = random_relabel(t, rng);
        CHECK(isosig_encode(r) == sig);
        if (++n >= 500) break;
    }
    CHECK(n > 50);
}

TEST_CASE("distinct small triangulations get distinct signatures") {
    // Signatures separate the census by construction (census dedupes by signature);
    // check injectivity the other way: decoding two distinct census signatures gives
    // non-isomorphic triangulations — verified by invariants differing or by exhaustive
    // relabelling match failure on a small sample.
    auto census = cusped::testsupport::generate_census(1, 100000);
    for (size_t i = 0; i < census.size(); ++i)
        for (size_t j = i + 1; j < census.size(); ++j) {
            const Triangulation &a = census[i], &b = census[j];
            if (a.size() != b.size()) continue;
            bool isomorphic = false;
            // exhaustive: all relabellings of a (1 tet: 24 corner perms)
            for (const Perm4& p : all_perm4_lex()) {
                Triangulation r = a.relabel({0}, {p});
                if (r == b) isomorphic = true;
            }
            CHECK_FALSE(isomorphic);
        }
}

TEST_CASE("canonical labelling reproduces the decoded form") {
    Triangulation t = isosig_decode("cPcbbbiht");
    std::mt19937_64 rng(99);
    Triangulation u = random_relabel(t, rng);
    LabelledTriangulation lab = canonical_labelling(u);
    CHECK(lab.signature == "cPcbbbiht");
    CHECK(lab.tri == t);
    // tet_order and corner_perm describe the relabelling: applying it to u gives lab.tri.
    std::vector<int> new_index(u.size());
    for (int i = 0; i < u.size(); ++i) new_index[lab.tet_order[i]] = i;
    CHECK(u.relabel(new_index, lab.corner_perm) == lab.tri);
}
