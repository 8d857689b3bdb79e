#include "qtoric/fixtures.hpp"

namespace qtoric {

const std::vector<Fixture>& builtinFixtures() {
    static const std::vector<Fixture> fixtures = {
        {"simplex-1", "segment [0,1]",
         "dim 1\n"
         "facet 1 | 0\n"
         "facet -1 | -1\n"},
        {"simplex-2", "standard triangle",
         "dim 2\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 -1 | -1\n"},
        {"simplex-3", "standard 3-simplex",
         "dim 3\n"
         "facet 1 0 0 | 0\n"
         "facet 0 1 0 | 0\n"
         "facet 0 0 1 | 0\n"
         "facet -1 -1 -1 | -1\n"},
        {"simplex-4", "standard 4-simplex",
         "dim 4\n"
         "facet 1 0 0 0 | 0\n"
         "facet 0 1 0 0 | 0\n"
         "facet 0 0 1 0 | 0\n"
         "facet 0 0 0 1 | 0\n"
         "facet -1 -1 -1 -1 | -1\n"},
        {"cube-2", "unit square",
         "dim 2\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 0 | -1\n"
         "facet 0 -1 | -1\n"},
        {"cube-3", "unit cube",
         "dim 3\n"
         "facet 1 0 0 | 0\n"
         "facet 0 1 0 | 0\n"
         "facet 0 0 1 | 0\n"
         "facet -1 0 0 | -1\n"
         "facet 0 -1 0 | -1\n"
         "facet 0 0 -1 | -1\n"},
        {"cube-4", "unit 4-cube",
         "dim 4\n"
         "facet 1 0 0 0 | 0\n"
         "facet 0 1 0 0 | 0\n"
         "facet 0 0 1 0 | 0\n"
         "facet 0 0 0 1 | 0\n"
         "facet -1 0 0 0 | -1\n"
         "facet 0 -1 0 0 | -1\n"
         "facet 0 0 -1 0 | -1\n"
         "facet 0 0 0 -1 | -1\n"},
        {"pentagon", "rational pentagon, 5 facets",
         "dim 2\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 0 | -2\n"
         "facet 0 -1 | -2\n"
         "facet -1 -1 | -3\n"},
        {"hexagon", "rational hexagon, 6 facets",
         "dim 2\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 0 | -2\n"
         "facet 0 -1 | -2\n"
         "facet -1 -1 | -3\n"
         "facet 1 1 | 1\n"},
        {"dodecahedron", "regular dodecahedron, normals in Q(sqrt 5)",
         "dim 3\n"
         "sqrt 5\n"
         "facet 0 1 1/2+1/2s | -1\n"
         "facet 0 1 -1/2-1/2s | -1\n"
         "facet 0 -1 1/2+1/2s | -1\n"
         "facet 0 -1 -1/2-1/2s | -1\n"
         "facet 1 1/2+1/2s 0 | -1\n"
         "facet 1 -1/2-1/2s 0 | -1\n"
         "facet -1 1/2+1/2s 0 | -1\n"
         "facet -1 -1/2-1/2s 0 | -1\n"
         "facet 1/2+1/2s 0 1 | -1\n"
         "facet 1/2+1/2s 0 -1 | -1\n"
         "facet -1/2-1/2s 0 1 | -1\n"
         "facet -1/2-1/2s 0 -1 | -1\n"},
        {"cp2-triangle", "Delzant triangle, all chart groups trivial",
         "dim 2\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 -1 | -1\n"},
        {"weighted-triangle-2", "triangle with one Z/2 chart group",
         "dim 2\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 -2 | -1\n"},
        {"weighted-triangle-3", "triangle with one Z/3 chart group",
         "dim 2\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 -3 | -1\n"},
        {"golden-triangle", "nonrational triangle with golden-ratio normal",
         "dim 2\n"
         "sqrt 5\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 -1/2-1/2s | -1\n"},
        {"golden-quad", "unit square with one golden-scaled normal; nonrational",
         "dim 2\n"
         "sqrt 5\n"
         "facet 1 0 | 0\n"
         "facet 0 1 | 0\n"
         "facet -1 0 | -1\n"
         "facet 0 -1/2-1/2s | -1/2-1/2s\n"},
        {"pyramid", "square pyramid; nonsimple apex, rejected by check",
         "dim 3\n"
         "facet 0 0 1 | 0\n"
         "facet -1 0 -1 | -1\n"
         "facet 1 0 -1 | -1\n"
         "facet 0 -1 -1 | -1\n"
         "facet 0 1 -1 | -1\n"},
    };
    return fixtures;
}

const Fixture& fixtureByName(const std::string& name) {
    for (const Fixture& f : builtinFixtures())
        if (f.name == name) return f;
    throw SpecParseError("unknown fixture \"" + name + "\"");
}

PolytopeSpec fixtureSpec(const std::string& name) {
    return parseSpec(fixtureByName(name).specText, name);
}

} // namespace qtoric
