#pragma once

#include <optional>
#include <vector>

#include "gring/numutil.hpp"

namespace gring {

// Integer column lattices in Z^n.  Columns are generators.
using IntMat = std::vector<std::vector<Int>>;  // list of columns, each length n

// Column-style Hermite normal form of the lattice spanned by the columns.
// Returns the echelon basis (zero columns dropped); pivots are positive and
// entries above each pivot are reduced into [0, pivot).
IntMat hnf(IntMat cols, unsigned n);

// Does v lie in the lattice spanned by basis (an HNF output)?
bool hnf_contains(const IntMat& basis, unsigned n, const std::vector<Int>& v);

// Lattice(sub) subset of Lattice(super)?
bool lattice_subset(const IntMat& sub, const IntMat& super, unsigned n);

// Index [L2 : L1] for full-rank L1 <= L2 of the same rank (0 when ranks
// differ or containment fails).
Int lattice_index(const IntMat& sub, const IntMat& super, unsigned n);

// One integral solution y of A y = b (A given by columns), if any.
std::optional<std::vector<Int>> solve_integer(const IntMat& A, unsigned n,
                                              const std::vector<Int>& b);

}  // namespace gring
