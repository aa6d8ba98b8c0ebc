#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gring/group_ring.hpp"

namespace gring {

// Element of zeta(C[G]) in character coordinates: one component per
// irreducible character, via zeta(C[G]) = prod_{chi} C.
struct CenterElem {
    const CharacterTable* tab = nullptr;
    std::vector<Cyclo> comp;  // size = table size

    static CenterElem zero(const CharacterTable& t);
    static CenterElem one(const CharacterTable& t);
    // Projector onto the chi-component (the image of e_chi).
    static CenterElem indicator(const CharacterTable& t, unsigned chi_index);
    // Coordinates of a central group-ring element: z_chi = chi(x)/chi(1).
    static CenterElem from_group_ring(const CharacterTable& t, const GroupRingElem& x);

    bool is_zero() const;
    CenterElem operator-() const;
    friend CenterElem operator+(const CenterElem& a, const CenterElem& b);
    friend CenterElem operator-(const CenterElem& a, const CenterElem& b);
    friend CenterElem operator*(const CenterElem& a, const CenterElem& b);  // componentwise
    CenterElem operator*(const Cyclo& s) const;
    friend bool operator==(const CenterElem& a, const CenterElem& b);
    friend bool operator!=(const CenterElem& a, const CenterElem& b) { return !(a == b); }

    // iota_sharp in character coordinates: component at chi moves to chi-check.
    CenterElem dual() const;

    // Galois stability: lies in zeta(Q[G]) iff for all k coprime to the level
    // the component at the twisted character equals the twisted component.
    bool is_galois_stable() const;

    // The element as a group-ring element (inverse of from_group_ring).
    GroupRingElem to_group_ring() const;
    // Rational coefficient per conjugacy class (requires Galois stability);
    // these are the coordinates used for integer-lattice comparisons.
    std::vector<Rat> class_coords() const;

    // Canonical text form for dedup and reports.
    std::string str() const;
};

// Reduced norm of a square matrix over E[G]: the component at chi is the
// determinant of the matrix blown up through the representation of chi.
CenterElem nrd(const RepSet& reps, const std::vector<std::vector<GroupRingElem>>& M);

// Determinant by fraction-free Bareiss elimination (entries in Q(zeta)).
Cyclo bareiss_det(std::vector<std::vector<Cyclo>> m);

// A finitely generated xi(Z[G])-ideal given by a generator list plus the
// bounds under which it was produced.
struct IdealGens {
    const CharacterTable* tab = nullptr;
    std::vector<CenterElem> gens;
    // boundedness metadata (free-form, recorded in reports)
    std::string xi_bound;
    std::string phi_pool;

    void dedup();
};

// Generators of a bounded from-below approximation of the Whitehead order
// xi(Z[G]): reduced norms of matrices over Z[G] of size <= size_bound with
// entries from the structured pool {0, +-g, g+-h} plus a seeded pseudorandom
// sample with coefficients bounded by coeff_bound.  For abelian G the exact
// answer {images of g} is returned.
IdealGens whitehead_generators(const RepSet& reps, unsigned size_bound, long coeff_bound,
                               uint64_t seed = 1, unsigned random_samples = 32);

}  // namespace gring
