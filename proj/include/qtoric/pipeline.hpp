#pragma once

// End-to-end derivation for one polytope spec, plus the line-oriented atlas
// document.  All CLI subcommands and the acceptance tests run through here.

#include <map>
#include <string>
#include <vector>

#include "qtoric/atlas.hpp"
#include "qtoric/cohomology.hpp"

namespace qtoric {

struct Analysis {
    PolytopeSpec spec;
    std::vector<Vertex> vertices;
    SimplicityReport simplicity;
    FaceLattice lattice;
    FVector fvec;
    HVector hF;

    unsigned long long seed = 0;
    VecS direction;
    MorseData morse;
    HVector hMorse;

    Quasilattice quasilattice;
    int zrank = 0;
    bool rational = false;
    KernelBasis kernel;

    std::vector<Chart> chartList;
    std::vector<Stratum> strataList;
    std::map<int, long long> census;
    std::vector<OverlapRecord> overlaps;

    BettiVector bettiH;
    MVResult mv;
    long long euler = 0;
};

// Throws GeometryError (empty, unbounded, nonsimple, degenerate) or
// SpecParseError upstream; internal cross-checks throw InternalError.
Analysis runAnalysis(const PolytopeSpec& spec, unsigned long long seed);

// Deterministic atlas document; the [spec] section re-parses to the same
// derived data.
std::string emitAtlas(const Analysis& a);

} // namespace qtoric
