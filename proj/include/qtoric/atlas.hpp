#pragma once

// Combinatorial atlas data of the quasitoric space: strata of the open set
// C^d_Delta, one chart per vertex with its model group, the orbit census,
// and the filtration overlap records used by the Betti-number induction.

#include <map>
#include <vector>

#include "qtoric/combinatorics.hpp"
#include "qtoric/quasilattice.hpp"

namespace qtoric {

struct Stratum {
    IndexSet face;       // I_F: coordinates ranging over C (may vanish)
    IndexSet freeCoords; // complement: coordinates in C^*
};

// One stratum per face, the dense (C^*)^d stratum (I_F empty) included.
std::vector<Stratum> strata(const FaceLattice& lattice, int facetCount);

struct Chart {
    IndexSet vertexSet; // I_nu
    int modelDimension = 0;
    GroupStructure group;
};

// One chart per vertex; model group Gamma_nu from the quasilattice module.
std::vector<Chart> charts(const PolytopeSpec& spec, const std::vector<Vertex>& vertices);

// Orbit dimensions are face dimensions: the census restates the f-vector.
std::map<int, long long> orbitCensus(const FaceLattice& lattice);

struct OverlapRecord {
    int k = 0;         // filtration step, 2..f_0
    IndexSet face;     // I_{F_k}
    int sphereDim = 0; // 2|I_{F_k}| - 1, dimension of the homotopy sphere
    IndexSet residual; // I_{nu_k} minus I_{F_k}
};

std::vector<OverlapRecord> overlapRecords(const MorseData& md,
                                          const std::vector<Vertex>& vertices);

} // namespace qtoric
