#pragma once

// Group-theoretic side of the construction: the kernel of the projection
// e_j -> X_j, the quasilattice generated by the facet normals, and the chart
// groups Gamma_nu = N cap T^nu with their abelian structure.

#include <string>
#include <vector>

#include "qtoric/intmatrix.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

struct Quasilattice {
    FieldSpec field;
    int n = 0;
    std::vector<VecS> generators; // facet normals in spec order, then extras
};

Quasilattice quasilatticeOf(const PolytopeSpec& spec);

// Z-rank of the generated Z-module, via the Q-basis {1, sqrt d} embedding.
int quasilatticeZRank(const Quasilattice& q);

// A finitely generated spanning submodule of R^n is discrete iff its Z-rank
// equals n.
bool isRational(const Quasilattice& q);

struct KernelBasis {
    MatS vectors; // d x (d-n); columns v satisfy sum_j v_j X_j = 0
};

KernelBasis kernelBasis(const PolytopeSpec& spec);

// Element of a torus (R/Z)^m with exact coordinates, stored as the canonical
// representative in [0,1)^m.
struct TorusElement {
    VecS coords;

    explicit TorusElement(const VecS& raw);
    bool isZero() const;
    std::string str() const; // "1/2,0"
    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        if (a.coords.size() != b.coords.size()) return false;
        for (Eigen::Index i = 0; i < a.coords.size(); ++i)
            if (a.coords(i) != b.coords(i)) return false;
        return true;
    }
};

struct GroupStructure {
    enum class Kind { Trivial, Finite, Infinite };

    Kind kind = Kind::Trivial;
    Int order = 1;                    // meaningful for Trivial/Finite
    std::vector<Int> invariantFactors; // torsion part, entries > 1, divisibility chain
    int freeRank = 0;                 // > 0 exactly in the Infinite case
    std::vector<TorusElement> generators;

    std::string isoStr() const; // "trivial", "Z/2", "Z/2 x Z/4", "Z^1 x Z/2"
};

// Images g_j = A_nu^{-1} X_j mod Z^n for j outside the active set (those
// inside map to standard basis vectors), then the extra quasilattice
// generators mapped the same way.
std::vector<TorusElement> gammaGenerators(const PolytopeSpec& spec, const Vertex& vertex);

// Structure of the subgroup of (R/Z)^n generated by the given elements:
// lifts together with Z^n generate a finite-rank module L; the group is
// L / Z^n, read off a Smith normal form in the rational embedding.
GroupStructure gammaStructure(const std::vector<TorusElement>& gens, int n,
                              const FieldSpec& field);

} // namespace qtoric
