#pragma once

#include <vector>

#include "gring/cyclo.hpp"

namespace gring {

// Dirichlet character modulo m with exact root-of-unity values.
struct DirichletChar {
    unsigned modulus = 1;
    std::vector<Cyclo> values;  // indexed by residue 0..m-1; zero off the units

    const Cyclo& operator()(unsigned long a) const { return values[a % modulus]; }
    bool is_principal() const;
    // chi(-1) = -1?
    bool is_odd() const;
    // Smallest f | m through which the character factors.
    unsigned conductor() const;
    // The primitive character modulo the conductor.
    DirichletChar primitive() const;
    // Multiplicativity and unit support; throws InputError on failure.
    void validate() const;
};

// All characters mod m (via the character table of (Z/m)^x), principal first,
// in the deterministic table order.
std::vector<DirichletChar> dirichlet_characters(unsigned m);

// Generalized Bernoulli number B_{1,chi} = m^{-1} sum_{a=1}^{m} chi(a) a.
// Requires a nonprincipal character.
Cyclo gen_bernoulli(const DirichletChar& chi);

// Exact L_S(chi, 0) = L(chi_prim, 0) * prod_{p in S, p
// not dividing the conductor} (1 - chi_prim(p)), where L(chi_prim, 0) is
// -B_{1,chi_prim} for odd chi, 0 for even nonprincipal chi and zeta(0) = -1/2
// for the principal character.  s_primes lists the finite places of S (the
// archimedean place is always present); it must contain every prime dividing
// the conductor.
Cyclo l_value_at_zero(const DirichletChar& chi, const std::vector<unsigned long>& s_primes);

}  // namespace gring
