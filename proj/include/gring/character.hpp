#pragma once

#include <memory>
#include <vector>

#include "gring/cyclo.hpp"
#include "gring/group.hpp"

namespace gring {

// Irreducible complex character with exact values in Q(zeta_exp(G)).
struct Character {
    const FiniteGroup* group = nullptr;
    std::vector<Cyclo> values;  // per element index, level = exp(G)
    unsigned degree = 0;

    const Cyclo& operator()(unsigned g) const { return values[g]; }
    bool is_trivial() const;
    // chi(T_H) = sum of values over a subgroup's elements.
    Cyclo sum_over(const Subgroup& H) const;
};

// Complete table of irreducible characters, ordered deterministically:
// trivial character first, then ascending degree, then lexicographic on the
// coefficient vectors of the values.
class CharacterTable {
public:
    explicit CharacterTable(const FiniteGroup& G);

    const FiniteGroup& group() const { return *G_; }
    unsigned size() const { return (unsigned)chars_.size(); }
    unsigned level() const { return level_; }  // exp(G)
    const Character& at(unsigned i) const { return chars_[i]; }
    const std::vector<Character>& characters() const { return chars_; }

    // Index of the contragredient character (an involution on the table).
    unsigned contragredient(unsigned i) const { return contra_[i]; }
    // Index of the Galois twist chi^sigma_k, sigma_k : zeta -> zeta^k.
    unsigned galois_twist(unsigned i, long k) const;
    // Index of the character with the given value vector; throws if absent.
    unsigned index_of(const std::vector<Cyclo>& values) const;

    // <chi_i, chi_j> = |G|^{-1} sum_g chi_i(g) conj(chi_j(g)), exact.
    Cyclo inner_product(unsigned i, unsigned j) const;

private:
    const FiniteGroup* G_;
    unsigned level_;
    std::vector<Character> chars_;
    std::vector<unsigned> contra_;

    void build();
};

Cyclo inner_product(const Character& a, const Character& b);

}  // namespace gring
