#include "qtoric/combinatorics.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qtoric {

std::string HVector::str() const {
    std::string out;
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(h[i]);
    }
    return out;
}

namespace {

long long binomial(int p, int q) {
    if (q < 0 || q > p) return 0;
    long long r = 1;
    for (int i = 0; i < q; ++i) r = r * (p - i) / (i + 1);
    return r;
}

} // namespace

HVector hFromF(const FVector& f) {
    const int n = f.n();
    if (f.f.back() != 1) throw InternalError("hFromF: f_n != 1");
    HVector h;
    h.h.assign(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        long long acc = 0;
        for (int i = 0; i <= k; ++i) {
            const long long term = binomial(n - i, n - k) * f.f[static_cast<size_t>(n - i)];
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        h.h[static_cast<size_t>(k)] = acc;
    }
    return h;
}

bool dehnSommerville(const HVector& h) {
    const size_t m = h.h.size();
    for (size_t k = 0; k < m; ++k)
        if (h.h[k] != h.h[m - 1 - k]) return false;
    return true;
}

VecS genericDirection(const PolytopeSpec& spec, const std::vector<Vertex>& vertices,
                      unsigned long long seed) {
    if (vertices.empty()) throw InternalError("genericDirection: no vertices");
    std::mt19937_64 eng(seed);
    long long range = 1 << 10;
    const int budget = 64;
    for (int attempt = 0; attempt < budget; ++attempt) {
        VecS dir(spec.n);
        bool zero = true;
        for (int i = 0; i < spec.n; ++i) {
            // uniform-ish in [-range, range]; hand-rolled for cross-platform determinism
            const long long c =
                static_cast<long long>(eng() % (2 * static_cast<unsigned long long>(range) + 1)) -
                range;
            dir(i) = Scalar(c);
            if (c != 0) zero = false;
        }
        if (range < (1LL << 40)) range *= 2;
        if (zero) continue;
        std::vector<Scalar> heights;
        heights.reserve(vertices.size());
        for (const Vertex& v : vertices) heights.push_back(pairing(v.coords, dir));
        std::sort(heights.begin(), heights.end());
        bool distinct = true;
        for (size_t i = 0; i + 1 < heights.size() && distinct; ++i)
            if (heights[i] == heights[i + 1]) distinct = false;
        if (distinct) return dir;
    }
    throw InternalError("genericDirection: retry budget of " + std::to_string(budget) +
                        " attempts exhausted for seed " + std::to_string(seed));
}

MorseData morseData(const PolytopeSpec& spec, const std::vector<Vertex>& vertices,
                    const FaceLattice& lattice, const VecS& direction) {
    const int n = spec.n;
    MorseData md;
    md.direction = direction;

    std::vector<Scalar> height(vertices.size());
    for (size_t id = 0; id < vertices.size(); ++id)
        height[id] = pairing(vertices[id].coords, direction);

    std::vector<int> order(vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return height[static_cast<size_t>(a)] < height[static_cast<size_t>(b)];
    });
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (height[static_cast<size_t>(order[i])] == height[static_cast<size_t>(order[i + 1])])
            throw NonGenericDirection("height tie between vertices " +
                                      coordsStr(vertices[static_cast<size_t>(order[i])].coords) +
                                      " and " +
                                      coordsStr(vertices[static_cast<size_t>(order[i + 1])].coords));

    for (int id : order) {
        const Vertex& v = vertices[static_cast<size_t>(id)];
        MorseEntry entry;
        entry.vertexId = id;
        entry.height = height[static_cast<size_t>(id)];
        // each edge at the vertex drops exactly one facet index; the face
        // F_k keeps the indices whose edge goes downward
        for (size_t drop = 0; drop < v.active.size(); ++drop) {
            IndexSet edgeSet;
            for (size_t t = 0; t < v.active.size(); ++t)
                if (t != drop) edgeSet.push_back(v.active[t]);
            const Face& edge = lattice.faceBySet(edgeSet);
            if (edge.vertices.size() != 2)
                throw InternalError("morse: edge {" + indexSetStr(edgeSet) + "} has " +
                                    std::to_string(edge.vertices.size()) + " vertices");
            const int other = edge.vertices[0] == id ? edge.vertices[1] : edge.vertices[0];
            if (height[static_cast<size_t>(other)] < entry.height)
                entry.face.push_back(v.active[drop]); // downward edge keeps its facet
        }
        entry.index = static_cast<int>(entry.face.size());
        entry.faceDim = n - entry.index;

        const Face& fk = lattice.faceBySet(entry.face);
        if (fk.dim != entry.faceDim) throw InternalError("morse: face dimension mismatch");
        for (int w : fk.vertices)
            if (w != id && !(entry.height < height[static_cast<size_t>(w)]))
                throw InternalError("morse: vertex " + coordsStr(v.coords) +
                                    " is not the lowest vertex of its face F_k");
        md.entries.push_back(std::move(entry));
    }

    if (md.entries.front().index != 0)
        throw InternalError("morse: lowest vertex has nonzero index");
    if (md.entries.back().index != n)
        throw InternalError("morse: highest vertex has index != n");
    return md;
}

HVector hFromMorse(const MorseData& md, int n) {
    HVector h;
    h.h.assign(static_cast<size_t>(n) + 1, 0);
    for (const MorseEntry& e : md.entries) {
        if (e.index < 0 || e.index > n) throw InternalError("hFromMorse: index out of range");
        ++h.h[static_cast<size_t>(e.index)];
    }
    return h;
}

} // namespace qtoric
