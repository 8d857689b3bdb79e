#pragma once

// H-representation polytopes: exact vertex enumeration, simplicity checking,
// and the face lattice keyed by tight facet index sets.
//
// Facet indices are 1-based ({1,...,d}, fixed by the order of facet lines in
// the spec) in every stored or printed index set; matrix accesses subtract 1
// locally.  Index sets are sorted ascending.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/linalg.hpp"
#include "qtoric/scalar.hpp"

namespace qtoric {

using IndexSet = std::vector<int>;

std::string indexSetStr(const IndexSet& s); // "1,3"; "-" for the empty set
IndexSet parseIndexSet(const std::string& text);

struct Halfspace {
    VecS normal;   // X_j
    Scalar offset; // lambda_j; the halfspace is <mu, X_j> >= lambda_j
};

struct PolytopeSpec {
    std::string name;
    int n = 0;
    FieldSpec field;
    std::vector<Halfspace> facets;
    std::vector<VecS> extraGenerators; // optional qgen lines, widen the quasilattice

    int facetCount() const { return static_cast<int>(facets.size()); }
};

// Spec file grammar:
//   dim <n>
//   sqrt <d>                                (optional)
//   facet <scalar> ... <scalar> | <scalar>  (n normal entries, then offset)
//   qgen <scalar> ... <scalar>              (optional, after the facets)
// '#' starts a comment; blank lines ignored.  Facet order defines indices.
PolytopeSpec parseSpec(const std::string& text, const std::string& name = "");
PolytopeSpec parseSpecFile(const std::string& path);
std::string formatSpec(const PolytopeSpec& spec);

struct Vertex {
    VecS coords;
    IndexSet active; // I_nu: exactly the facets tight at this point
};

std::string coordsStr(const VecS& coords); // "(0,1/2,-1)"

// Exact vertex set: solve every n-subset of facets, keep feasible solutions,
// dedupe by exact coordinates.  Throws GeometryError for empty or degenerate
// input.  Vertices come back sorted by active set.
std::vector<Vertex> enumerateVertices(const PolytopeSpec& spec);

struct SimplicityReport {
    bool bounded = false;
    std::optional<VecS> recessionRay;
    bool fullDimensional = false;
    std::vector<int> nonsimpleVertices; // vertex ids with |active| != n
    std::vector<int> redundantFacets;   // facet indices tight at no vertex

    bool simple() const {
        return bounded && fullDimensional && nonsimpleVertices.empty() && redundantFacets.empty();
    }
    std::string describe(const std::vector<Vertex>& vertices) const;
};

SimplicityReport checkSimple(const PolytopeSpec& spec, const std::vector<Vertex>& vertices);
void requireSimple(const PolytopeSpec& spec, const std::vector<Vertex>& vertices);

struct Face {
    IndexSet active; // I_F
    int dim = 0;     // n - |I_F|
    std::vector<int> vertices;
};

struct FaceLattice {
    int n = 0;
    // sorted by (|I_F| ascending, lex): the polytope itself first, vertices last
    std::vector<Face> faces;
    std::map<IndexSet, int> faceIndex;
    std::vector<std::vector<int>> covers; // covers[i]: faces one dimension below i

    bool hasFace(const IndexSet& s) const { return faceIndex.count(s) > 0; }
    const Face& faceBySet(const IndexSet& s) const;
};

FaceLattice buildFaceLattice(const PolytopeSpec& spec, const std::vector<Vertex>& vertices);

struct FVector {
    std::vector<long long> f; // f_0..f_n

    int n() const { return static_cast<int>(f.size()) - 1; }
    std::string str() const;
    friend bool operator==(const FVector&, const FVector&) = default;
};

FVector fVector(const FaceLattice& lattice);

} // namespace qtoric
