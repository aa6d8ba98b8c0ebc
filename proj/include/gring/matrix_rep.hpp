#pragma once

#include <vector>

#include "gring/character.hpp"

namespace gring {

// Explicit matrix representation with exact cyclotomic entries.
// mats[g] is dim x dim, row major; multiplicative on all pairs.
struct MatrixRep {
    const FiniteGroup* group = nullptr;
    unsigned dim = 0;
    std::vector<std::vector<Cyclo>> mats;  // per element, size dim*dim

    const Cyclo& at(unsigned g, unsigned i, unsigned j) const { return mats[g][i * dim + j]; }
    Cyclo trace(unsigned g) const;
    // Exact checks: mats[g*h] = mats[g]*mats[h] and trace = chi.
    void validate(const Character& chi) const;
};

// One representation per irreducible character, in table order, built by
// monomial induction from linear characters of subgroups.  Covers M-groups
// (every fixture group).  Throws NotMonomial with the offending character
// index when no inducing pair exists.
std::vector<MatrixRep> monomial_irreps(const CharacterTable& table);

// Representation set: table plus matching irreps, the input to reduced norms.
struct RepSet {
    const CharacterTable* table = nullptr;
    std::vector<MatrixRep> reps;

    static RepSet build(const CharacterTable& table);
    // Adopt externally supplied representations (validated against the table).
    static RepSet external(const CharacterTable& table, std::vector<MatrixRep> reps);
};

}  // namespace gring
