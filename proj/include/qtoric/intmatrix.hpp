#pragma once

// Integer matrix normal forms used for abelian group structure: row-style
// Hermite form for lattice bases, Smith form for invariant factors.

#include <vector>

#include "qtoric/scalar.hpp"

namespace qtoric {

// Basis of the lattice generated by the rows, returned as the rows of a
// full-row-rank matrix in Hermite normal form (pivots positive, entries
// above each pivot reduced into [0, pivot)).
MatZ hermiteRowBasis(MatZ a);

struct SmithResult {
    // Diagonal of the Smith form: nonnegative, divisibility chain, zeros last.
    std::vector<Int> invariants;
    int rank = 0;
};

SmithResult smithNormalForm(MatZ a);

} // namespace qtoric
