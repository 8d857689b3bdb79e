#include "qtoric/atlas.hpp"

#include <algorithm>

namespace qtoric {

std::vector<Stratum> strata(const FaceLattice& lattice, int facetCount) {
    std::vector<Stratum> out;
    out.reserve(lattice.faces.size());
    for (const Face& face : lattice.faces) {
        Stratum s;
        s.face = face.active;
        for (int j = 1; j <= facetCount; ++j)
            if (!std::binary_search(s.face.begin(), s.face.end(), j)) s.freeCoords.push_back(j);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Chart> charts(const PolytopeSpec& spec, const std::vector<Vertex>& vertices) {
    std::vector<Chart> out;
    out.reserve(vertices.size());
    for (const Vertex& v : vertices) {
        Chart c;
        c.vertexSet = v.active;
        c.modelDimension = spec.n;
        c.group = gammaStructure(gammaGenerators(spec, v), spec.n, spec.field);
        out.push_back(std::move(c));
    }
    return out;
}

std::map<int, long long> orbitCensus(const FaceLattice& lattice) {
    std::map<int, long long> census;
    for (const Face& face : lattice.faces) ++census[face.dim];
    return census;
}

std::vector<OverlapRecord> overlapRecords(const MorseData& md,
                                          const std::vector<Vertex>& vertices) {
    std::vector<OverlapRecord> out;
    for (size_t k = 2; k <= md.entries.size(); ++k) {
        const MorseEntry& e = md.entries[k - 1];
        if (e.index < 1)
            throw InternalError("overlap records: vertex at step " + std::to_string(k) +
                                " has index 0; only the lowest vertex may");
        OverlapRecord rec;
        rec.k = static_cast<int>(k);
        rec.face = e.face;
        rec.sphereDim = 2 * e.index - 1;
        const IndexSet& active = vertices[static_cast<size_t>(e.vertexId)].active;
        std::set_difference(active.begin(), active.end(), e.face.begin(), e.face.end(),
                            std::back_inserter(rec.residual));
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace qtoric
