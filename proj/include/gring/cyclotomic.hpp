#pragma once

#include <memory>

#include "gring/stickelberger.hpp"

namespace gring {

// The abelian instantiation for L = Q(zeta_m) over Q:
//   G = (Z/m)^x with the residue of -1 generating the decomposition group at
//   the archimedean place, inertia-times-Frobenius decomposition groups at
//   the ramified primes, and Frobenius data at the unramified places of T.
// Owns the group and table; the embedded references stay valid across moves.
struct CyclotomicSetup {
    unsigned m = 1;
    std::vector<unsigned long> residues;  // element index -> residue mod m
    std::unique_ptr<FiniteGroup> group;
    std::unique_ptr<CharacterTable> table;
    RepSet reps;
    SConfig cfg;
    LSource lsource;  // Dirichlet characters aligned with the table order

    unsigned index_of_residue(unsigned long r) const;
};

// s_extra: finite primes of S beyond the ramified ones (those are always
// included); t_primes: unramified primes for T (with Frobenius and norm).
// Throws InputError when m < 3, when a T-prime ramifies, or on overlap.
CyclotomicSetup cyclotomic_setup(unsigned m, const std::vector<unsigned long>& s_extra = {},
                                 const std::vector<unsigned long>& t_primes = {});

}  // namespace gring
