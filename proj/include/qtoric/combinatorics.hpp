#pragma once

// f/h-vector combinatorics and Morse indexing of vertices along a generic
// height direction.

#include <vector>

#include "qtoric/polytope.hpp"

namespace qtoric {

struct HVector {
    std::vector<long long> h; // h_0..h_n

    int n() const { return static_cast<int>(h.size()) - 1; }
    std::string str() const;
    friend bool operator==(const HVector&, const HVector&) = default;
};

// h_k = sum_{i=0}^{k} (-1)^{k-i} C(n-i, n-k) f_{n-i}
HVector hFromF(const FVector& f);

bool dehnSommerville(const HVector& h);

// Integer direction with pairwise-distinct vertex heights, sampled
// deterministically from the seed; the coordinate range doubles on every
// failed attempt.
VecS genericDirection(const PolytopeSpec& spec, const std::vector<Vertex>& vertices,
                      unsigned long long seed);

struct MorseEntry {
    int vertexId;
    Scalar height;
    int index;    // number of downward edges = |face|
    IndexSet face; // I_{F_k}: largest face with this vertex lowest
    int faceDim;  // r_k = n - index
};

struct MorseData {
    VecS direction;
    std::vector<MorseEntry> entries; // strictly increasing height
};

// Classifies the n edges at each vertex by the height of the opposite
// endpoint.  Throws NonGenericDirection on a height tie.
MorseData morseData(const PolytopeSpec& spec, const std::vector<Vertex>& vertices,
                    const FaceLattice& lattice, const VecS& direction);

// h_i = number of vertices of Morse index i
HVector hFromMorse(const MorseData& md, int n);

} // namespace qtoric
