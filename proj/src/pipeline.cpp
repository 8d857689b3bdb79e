#include "qtoric/pipeline.hpp"

#include <sstream>

namespace qtoric {

Analysis runAnalysis(const PolytopeSpec& spec, unsigned long long seed) {
    Analysis a;
    a.spec = spec;
    a.seed = seed;
    a.vertices = enumerateVertices(spec);
    a.simplicity = checkSimple(spec, a.vertices);
    if (!a.simplicity.simple()) throw GeometryError(a.simplicity.describe(a.vertices));
    a.lattice = buildFaceLattice(spec, a.vertices);
    a.fvec = fVector(a.lattice);
    a.hF = hFromF(a.fvec);

    a.direction = genericDirection(spec, a.vertices, seed);
    a.morse = morseData(spec, a.vertices, a.lattice, a.direction);
    a.hMorse = hFromMorse(a.morse, spec.n);

    a.quasilattice = quasilatticeOf(spec);
    a.zrank = quasilatticeZRank(a.quasilattice);
    a.rational = a.zrank == spec.n;
    a.kernel = kernelBasis(spec);

    a.chartList = charts(spec, a.vertices);
    a.strataList = strata(a.lattice, spec.facetCount());
    a.census = orbitCensus(a.lattice);
    a.overlaps = overlapRecords(a.morse, a.vertices);

    a.bettiH = bettiFromH(a.hF);
    a.mv = mvFiltration(a.morse, spec.n);
    a.euler = eulerCharacteristic(a.mv.betti);
    return a;
}

std::string emitAtlas(const Analysis& a) {
    std::ostringstream out;
    out << "[spec]\n";
    if (!a.spec.name.empty()) out << "# name: " << a.spec.name << "\n";
    out << formatSpec(a.spec);

    out << "[fvector]\n" << a.fvec.str() << "\n";
    out << "[hvector]\n";
    out << "from_f " << a.hF.str() << "\n";
    out << "from_morse " << a.hMorse.str() << "\n";

    out << "[rational]\n";
    out << (a.rational ? "rational true" : "rational false") << "\n";
    out << "zrank " << a.zrank << "\n";

    out << "[charts]\n";
    for (const Chart& c : a.chartList) {
        out << "chart " << indexSetStr(c.vertexSet) << " dim " << c.modelDimension << " group "
            << c.group.isoStr();
        out << " gens";
        bool any = false;
        for (const TorusElement& g : c.group.generators) {
            if (g.isZero()) continue;
            out << ' ' << g.str();
            any = true;
        }
        if (!any) out << " -";
        out << "\n";
    }

    out << "[strata]\n";
    for (const Stratum& s : a.strataList)
        out << "stratum " << indexSetStr(s.face) << " free " << indexSetStr(s.freeCoords) << "\n";

    out << "[morse]\n";
    out << "seed " << a.seed << "\n";
    out << "direction";
    for (Eigen::Index i = 0; i < a.direction.size(); ++i) out << ' ' << a.direction(i).str();
    out << "\n";
    for (size_t k = 0; k < a.morse.entries.size(); ++k) {
        const MorseEntry& e = a.morse.entries[k];
        const Vertex& v = a.vertices[static_cast<size_t>(e.vertexId)];
        out << "v " << (k + 1) << " vertex " << indexSetStr(v.active) << " height "
            << e.height.str() << " index " << e.index << " face " << indexSetStr(e.face) << "\n";
    }

    out << "[overlaps]\n";
    for (const OverlapRecord& r : a.overlaps)
        out << "k " << r.k << " face " << indexSetStr(r.face) << " sphere " << r.sphereDim
            << " residual " << indexSetStr(r.residual) << "\n";

    out << "[betti]\n";
    out << "from_h " << a.bettiH.str() << "\n";
    out << "mayer_vietoris " << a.mv.betti.str() << "\n";
    out << "euler " << a.euler << "\n";
    return out.str();
}

} // namespace qtoric
