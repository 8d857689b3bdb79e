#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qtoric/fixtures.hpp"
#include "qtoric/pipeline.hpp"

using namespace qtoric;

TEST_CASE("strata counts and the dense stratum") {
    const Analysis a = runAnalysis(fixtureSpec("simplex-2"), 1);
    CHECK(a.strataList.size() == 7); // 3 + 3 + 1
    bool dense = false;
    for (const Stratum& s : a.strataList) {
        IndexSet all;
        std::merge(s.face.begin(), s.face.end(), s.freeCoords.begin(), s.freeCoords.end(),
                   std::back_inserter(all));
        CHECK(all == IndexSet{1, 2, 3}); // partition of {1..d}
        if (s.face.empty()) {
            dense = true;
            CHECK(s.freeCoords == IndexSet{1, 2, 3});
        }
    }
    CHECK(dense);

    const Analysis sq = runAnalysis(fixtureSpec("cube-2"), 1);
    CHECK(sq.strataList.size() == 9);
}

TEST_CASE("charts: one per vertex, group data attached") {
    const Analysis a = runAnalysis(fixtureSpec("weighted-triangle-2"), 1);
    REQUIRE(a.chartList.size() == 3);
    int trivial = 0, z2 = 0;
    for (const Chart& c : a.chartList) {
        CHECK(c.modelDimension == 2);
        if (c.group.kind == GroupStructure::Kind::Trivial) ++trivial;
        if (c.group.kind == GroupStructure::Kind::Finite && c.group.order == 2) ++z2;
    }
    CHECK(trivial == 2);
    CHECK(z2 == 1);

    const Analysis g = runAnalysis(fixtureSpec("golden-triangle"), 1);
    int infinite = 0;
    for (const Chart& c : g.chartList)
        if (c.group.kind == GroupStructure::Kind::Infinite) ++infinite;
    CHECK(infinite >= 1);
}

TEST_CASE("orbit census restates the f-vector") {
    const Analysis a = runAnalysis(fixtureSpec("cube-3"), 1);
    CHECK(a.census == std::map<int, long long>{{0, 8}, {1, 12}, {2, 6}, {3, 1}});
    const Analysis t = runAnalysis(fixtureSpec("simplex-2"), 1);
    CHECK(t.census == std::map<int, long long>{{0, 3}, {1, 3}, {2, 1}});
    const Analysis p = runAnalysis(fixtureSpec("pentagon"), 1);
    CHECK(p.census == std::map<int, long long>{{0, 5}, {1, 5}, {2, 1}});
}

TEST_CASE("overlap records follow the morse indices") {
    const PolytopeSpec spec = fixtureSpec("cube-2");
    const auto vertices = enumerateVertices(spec);
    const FaceLattice lattice = buildFaceLattice(spec, vertices);
    VecS dir(2);
    dir << Scalar(1), Scalar(2);
    const MorseData md = morseData(spec, vertices, lattice, dir);
    const auto recs = overlapRecords(md, vertices);
    REQUIRE(recs.size() == 3); // k = 2..f_0
    CHECK(recs[0].k == 2);
    CHECK(recs[0].sphereDim == 1);
    CHECK(recs[1].sphereDim == 1);
    CHECK(recs[2].k == 4);
    CHECK(recs[2].sphereDim == 3); // top vertex, index 2
    for (const auto& r : recs) {
        CHECK(r.sphereDim % 2 == 1);
        CHECK(static_cast<int>(r.face.size()) * 2 - 1 == r.sphereDim);
        // face and residual partition the vertex's active set
        const MorseEntry& e = md.entries[static_cast<size_t>(r.k - 1)];
        IndexSet all;
        std::merge(r.face.begin(), r.face.end(), r.residual.begin(), r.residual.end(),
                   std::back_inserter(all));
        CHECK(all == vertices[static_cast<size_t>(e.vertexId)].active);
    }
}

TEST_CASE("overlap records reject an index-0 vertex after the first") {
    const PolytopeSpec spec = fixtureSpec("cube-2");
    const auto vertices = enumerateVertices(spec);
    const FaceLattice lattice = buildFaceLattice(spec, vertices);
    VecS dir(2);
    dir << Scalar(1), Scalar(2);
    MorseData md = morseData(spec, vertices, lattice, dir);
    md.entries[2].index = 0; // corrupt
    CHECK_THROWS_AS(overlapRecords(md, vertices), InternalError);
}

TEST_CASE("atlas document is byte-deterministic") {
    const Analysis a1 = runAnalysis(fixtureSpec("golden-triangle"), 7);
    const Analysis a2 = runAnalysis(fixtureSpec("golden-triangle"), 7);
    CHECK(emitAtlas(a1) == emitAtlas(a2));
    const Analysis a3 = runAnalysis(fixtureSpec("golden-triangle"), 8);
    CHECK(emitAtlas(a1) != emitAtlas(a3)); // seed is part of the document
}

TEST_CASE("atlas document round-trips through its own [spec] section") {
    const Analysis a = runAnalysis(fixtureSpec("golden-quad"), 11);
    const std::string doc = emitAtlas(a);

    // extract the [spec] section
    std::istringstream in(doc);
    std::string line, specText;
    bool inSpec = false;
    while (std::getline(in, line)) {
        if (line == "[spec]") {
            inSpec = true;
            continue;
        }
        if (!line.empty() && line[0] == '[') inSpec = false;
        if (inSpec) specText += line + "\n";
    }
    const PolytopeSpec re = parseSpec(specText, "golden-quad");
    const Analysis b = runAnalysis(re, 11);
    CHECK(emitAtlas(b) == doc);
}

TEST_CASE("atlas document carries the expected sections and facts") {
    const Analysis a = runAnalysis(fixtureSpec("golden-triangle"), 7);
    const std::string doc = emitAtlas(a);
    for (const char* section : {"[spec]", "[fvector]", "[hvector]", "[rational]", "[charts]",
                                "[strata]", "[morse]", "[overlaps]", "[betti]"})
        CHECK(doc.find(section) != std::string::npos);
    CHECK(doc.find("rational false") != std::string::npos);
    CHECK(doc.find("zrank 3") != std::string::npos);
    CHECK(doc.find("group Z^1") != std::string::npos);
    CHECK(doc.find("from_h 1 0 1 0 1") != std::string::npos);
    CHECK(doc.find("mayer_vietoris 1 0 1 0 1") != std::string::npos);
    CHECK(doc.find("euler 3") != std::string::npos);
    CHECK(doc.find("seed 7") != std::string::npos);

    const Analysis cube = runAnalysis(fixtureSpec("cube-3"), 1);
    const std::string cubeDoc = emitAtlas(cube);
    CHECK(cubeDoc.find("rational true") != std::string::npos);
    // 8 trivial chart groups
    size_t pos = 0;
    int trivialCharts = 0;
    while ((pos = cubeDoc.find("group trivial", pos)) != std::string::npos) {
        ++trivialCharts;
        pos += 1;
    }
    CHECK(trivialCharts == 8);
}

TEST_CASE("golden document for the standard triangle, seed 1") {
    const Analysis a = runAnalysis(fixtureSpec("cp2-triangle"), 1);
    const std::string expected = "[spec]\n"
                                 "# name: cp2-triangle\n"
                                 "dim 2\n"
                                 "facet 1 0 | 0\n"
                                 "facet 0 1 | 0\n"
                                 "facet -1 -1 | -1\n"
                                 "[fvector]\n"
                                 "3 3 1\n"
                                 "[hvector]\n"
                                 "from_f 1 1 1\n"
                                 "from_morse 1 1 1\n"
                                 "[rational]\n"
                                 "rational true\n"
                                 "zrank 2\n"
                                 "[charts]\n"
                                 "chart 1,2 dim 2 group trivial gens -\n"
                                 "chart 1,3 dim 2 group trivial gens -\n"
                                 "chart 2,3 dim 2 group trivial gens -\n"
                                 "[strata]\n"
                                 "stratum - free 1,2,3\n"
                                 "stratum 1 free 2,3\n"
                                 "stratum 2 free 1,3\n"
                                 "stratum 3 free 1,2\n"
                                 "stratum 1,2 free 3\n"
                                 "stratum 1,3 free 2\n"
                                 "stratum 2,3 free 1\n"
                                 "[morse]\n"
                                 "seed 1\n"
                                 "direction 688 263\n"
                                 "v 1 vertex 1,2 height 0 index 0 face -\n"
                                 "v 2 vertex 1,3 height 263 index 1 face 3\n"
                                 "v 3 vertex 2,3 height 688 index 2 face 2,3\n"
                                 "[overlaps]\n"
                                 "k 2 face 3 sphere 1 residual 1\n"
                                 "k 3 face 2,3 sphere 3 residual -\n"
                                 "[betti]\n"
                                 "from_h 1 0 1 0 1\n"
                                 "mayer_vietoris 1 0 1 0 1\n"
                                 "euler 3\n";
    CHECK(emitAtlas(a) == expected);
}

TEST_CASE("every pair of charts overlaps in the dense stratum") {
    const Analysis a = runAnalysis(fixtureSpec("dodecahedron"), 3);
    // combinatorial witness: the empty face set is a subset of every I_nu
    for (const Chart& c : a.chartList) {
        bool witnessed = false;
        for (const Stratum& s : a.strataList)
            if (s.face.empty()) witnessed = true;
        CHECK(witnessed);
        CHECK(static_cast<int>(c.vertexSet.size()) == a.spec.n);
    }
}
