#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qtoric/combinatorics.hpp"
#include "qtoric/fixtures.hpp"

using namespace qtoric;

namespace {

// Independent oracle: sum_j f_j (t-1)^j = sum_k h_k t^{n-k}, evaluated by
// exact integer polynomial expansion.
HVector oracleHFromF(const FVector& f) {
    const int n = f.n();
    std::vector<long long> poly(static_cast<size_t>(n) + 1, 0); // coeffs of t^0..t^n
    std::vector<long long> power(1, 1);                         // (t-1)^j, starts at 1
    for (int j = 0; j <= n; ++j) {
        for (size_t c = 0; c < power.size(); ++c) poly[c] += f.f[static_cast<size_t>(j)] * power[c];
        // multiply power by (t - 1)
        std::vector<long long> next(power.size() + 1, 0);
        for (size_t c = 0; c < power.size(); ++c) {
            next[c + 1] += power[c];
            next[c] -= power[c];
        }
        power = std::move(next);
    }
    HVector h;
    h.h.assign(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) h.h[static_cast<size_t>(k)] = poly[static_cast<size_t>(n - k)];
    return h;
}

struct Built {
    PolytopeSpec spec;
    std::vector<Vertex> vertices;
    FaceLattice lattice;
    FVector f;
};

Built build(const std::string& name) {
    Built b;
    b.spec = fixtureSpec(name);
    b.vertices = enumerateVertices(b.spec);
    requireSimple(b.spec, b.vertices);
    b.lattice = buildFaceLattice(b.spec, b.vertices);
    b.f = fVector(b.lattice);
    return b;
}

VecS intDirection(std::initializer_list<long long> cs) {
    VecS v(static_cast<Eigen::Index>(cs.size()));
    Eigen::Index i = 0;
    for (long long c : cs) v(i++) = Scalar(c);
    return v;
}

} // namespace

TEST_CASE("h from f on the frozen fixtures") {
    CHECK(hFromF(FVector{{3, 3, 1}}).h == std::vector<long long>{1, 1, 1});
    CHECK(hFromF(FVector{{8, 12, 6, 1}}).h == std::vector<long long>{1, 3, 3, 1});
    CHECK(hFromF(FVector{{20, 30, 12, 1}}).h == std::vector<long long>{1, 9, 9, 1});
    CHECK(hFromF(FVector{{4, 4, 1}}).h == std::vector<long long>{1, 2, 1});
    CHECK(hFromF(FVector{{5, 5, 1}}).h == std::vector<long long>{1, 3, 1});
    CHECK(hFromF(FVector{{16, 32, 24, 8, 1}}).h == std::vector<long long>{1, 4, 6, 4, 1});
}

TEST_CASE("h from f agrees with the polynomial identity oracle") {
    for (const Fixture& fx : builtinFixtures()) {
        if (fx.name == "pyramid") continue;
        const Built b = build(fx.name);
        CAPTURE(fx.name);
        CHECK(hFromF(b.f) == oracleHFromF(b.f));
    }
}

TEST_CASE("closed-form anchors: h_0, h_1, h_n, sum") {
    for (const Fixture& fx : builtinFixtures()) {
        if (fx.name == "pyramid") continue;
        const Built b = build(fx.name);
        const HVector h = hFromF(b.f);
        const int n = b.spec.n;
        CAPTURE(fx.name);
        CHECK(h.h.front() == 1);
        CHECK(h.h.back() == 1);
        CHECK(h.h[1] == b.f.f[static_cast<size_t>(n - 1)] - n * b.f.f[static_cast<size_t>(n)]);
        long long sum = 0;
        for (long long v : h.h) sum += v;
        CHECK(sum == b.f.f[0]);
    }
}

TEST_CASE("dehn-sommerville") {
    CHECK(dehnSommerville(HVector{{1, 3, 3, 1}}));
    CHECK(dehnSommerville(HVector{{1, 9, 9, 1}}));
    CHECK_FALSE(dehnSommerville(HVector{{1, 2, 3}}));
}

TEST_CASE("generic direction accepts and rejects by exact height comparison") {
    const Built b = build("cube-2");
    // (1,2) separates the square's vertices: heights 0,1,2,3
    CHECK_NOTHROW(morseData(b.spec, b.vertices, b.lattice, intDirection({1, 2})));
    // (1,0) collides: heights 0,1,0,1
    CHECK_THROWS_AS(morseData(b.spec, b.vertices, b.lattice, intDirection({1, 0})),
                    NonGenericDirection);
    const Built t = build("simplex-2");
    CHECK_THROWS_AS(morseData(t.spec, t.vertices, t.lattice, intDirection({1, 1})),
                    NonGenericDirection);
    CHECK_NOTHROW(morseData(t.spec, t.vertices, t.lattice, intDirection({1, 2})));
}

TEST_CASE("sampled directions are generic and deterministic") {
    const Built b = build("dodecahedron");
    const VecS d1 = genericDirection(b.spec, b.vertices, 7);
    const VecS d2 = genericDirection(b.spec, b.vertices, 7);
    for (Eigen::Index i = 0; i < d1.size(); ++i) CHECK(d1(i) == d2(i));
    CHECK_NOTHROW(morseData(b.spec, b.vertices, b.lattice, d1));
}

TEST_CASE("morse data of the unit square, direction (1,2)") {
    const Built b = build("cube-2");
    const MorseData md = morseData(b.spec, b.vertices, b.lattice, intDirection({1, 2}));
    REQUIRE(md.entries.size() == 4);
    // heights 0,1,2,3: (0,0),(1,0),(0,1),(1,1)
    CHECK(md.entries[0].index == 0);
    CHECK(md.entries[0].face.empty()); // F_1 is the whole square
    CHECK(md.entries[0].faceDim == 2);
    CHECK(md.entries[1].index == 1);
    CHECK(md.entries[2].index == 1);
    CHECK(md.entries[3].index == 2);
    CHECK(md.entries[3].face == b.vertices[static_cast<size_t>(md.entries[3].vertexId)].active);
    CHECK(hFromMorse(md, 2).h == std::vector<long long>{1, 2, 1});
}

TEST_CASE("cube morse indices count the coordinates already at 1") {
    // direction (1,2,4): each edge flips one coordinate, so the index of a
    // vertex of [0,1]^3 is the number of coordinates equal to 1
    const Built b = build("cube-3");
    const MorseData md = morseData(b.spec, b.vertices, b.lattice, intDirection({1, 2, 4}));
    REQUIRE(md.entries.size() == 8);
    for (const MorseEntry& e : md.entries) {
        const Vertex& v = b.vertices[static_cast<size_t>(e.vertexId)];
        int ones = 0;
        for (Eigen::Index i = 0; i < 3; ++i)
            if (v.coords(i) == Scalar(1)) ++ones;
        CHECK(e.index == ones);
    }
    CHECK(hFromMorse(md, 3).h == std::vector<long long>{1, 3, 3, 1});
}

TEST_CASE("triangle indices are 0,1,2 in height order") {
    const Built b = build("simplex-2");
    const MorseData md = morseData(b.spec, b.vertices, b.lattice, intDirection({1, 2}));
    REQUIRE(md.entries.size() == 3);
    CHECK(md.entries[0].index == 0);
    CHECK(md.entries[1].index == 1);
    CHECK(md.entries[2].index == 2);
    CHECK(hFromMorse(md, 2) == hFromF(b.f));
}

TEST_CASE("index histogram equals h for 100 seeds on every fixture") {
    for (const Fixture& fx : builtinFixtures()) {
        if (fx.name == "pyramid") continue;
        const Built b = build(fx.name);
        const HVector expected = hFromF(b.f);
        CAPTURE(fx.name);
        for (unsigned long long seed = 1; seed <= 100; ++seed) {
            const VecS dir = genericDirection(b.spec, b.vertices, seed);
            const MorseData md = morseData(b.spec, b.vertices, b.lattice, dir);
            CHECK(hFromMorse(md, b.spec.n) == expected);
        }
    }
}

TEST_CASE("exactly one vertex of index 0 and one of index n") {
    for (const Fixture& fx : builtinFixtures()) {
        if (fx.name == "pyramid") continue;
        const Built b = build(fx.name);
        for (unsigned long long seed : {1ull, 2ull, 3ull}) {
            const MorseData md = morseData(b.spec, b.vertices, b.lattice,
                                           genericDirection(b.spec, b.vertices, seed));
            int zeros = 0, tops = 0;
            for (const MorseEntry& e : md.entries) {
                if (e.index == 0) ++zeros;
                if (e.index == b.spec.n) ++tops;
                CHECK(static_cast<int>(e.face.size()) == e.index);
                CHECK(e.faceDim == b.spec.n - e.index);
            }
            CHECK(zeros == 1);
            CHECK(tops == 1);
        }
    }
}

TEST_CASE("negating the direction reverses the index histogram") {
    for (const char* name : {"cube-3", "pentagon", "dodecahedron", "golden-triangle"}) {
        const Built b = build(name);
        const VecS dir = genericDirection(b.spec, b.vertices, 5);
        const MorseData up = morseData(b.spec, b.vertices, b.lattice, dir);
        const MorseData down = morseData(b.spec, b.vertices, b.lattice, VecS(-dir));
        // vertexwise: index flips to n - index
        for (const MorseEntry& e : up.entries) {
            bool found = false;
            for (const MorseEntry& o : down.entries)
                if (o.vertexId == e.vertexId) {
                    CHECK(o.index == b.spec.n - e.index);
                    found = true;
                }
            CHECK(found);
        }
        std::vector<long long> reversed = hFromMorse(up, b.spec.n).h;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(hFromMorse(down, b.spec.n).h == reversed);
    }
}

TEST_CASE("heights strictly increase along the morse order") {
    const Built b = build("golden-triangle");
    const MorseData md = morseData(b.spec, b.vertices, b.lattice,
                                   genericDirection(b.spec, b.vertices, 9));
    for (size_t i = 0; i + 1 < md.entries.size(); ++i)
        CHECK(md.entries[i].height < md.entries[i + 1].height);
}
