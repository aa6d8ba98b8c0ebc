#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gring/matrix_rep.hpp"

namespace gring {

// Element of E[G] for E = Q or a cyclotomic field: one coefficient per
// group element.
struct GroupRingElem {
    const FiniteGroup* G = nullptr;
    std::vector<Cyclo> c;  // size |G|

    static GroupRingElem zero(const FiniteGroup& G);
    static GroupRingElem one(const FiniteGroup& G);
    // The basis element g, optionally scaled.
    static GroupRingElem unit(const FiniteGroup& G, unsigned g, Cyclo scale = Cyclo::one());

    bool is_zero() const;
    // All coefficients rational?
    bool is_rational() const;
    GroupRingElem operator-() const;
    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
    // Convolution product induced by the group law.
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    GroupRingElem operator*(const Cyclo& s) const;
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);
    friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) { return !(a == b); }

    bool is_idempotent() const { return *this * *this == *this; }
    bool is_central() const;
    std::string str() const;
};

// The Q-linear anti-involution of E[G] inverting group elements.
GroupRingElem iota_sharp(const GroupRingElem& x);

// Primitive central idempotent e_chi = (chi(1)/|G|) sum_g chi(g) g^{-1}.
GroupRingElem e_psi(const Character& chi);

// e_H = |H|^{-1} T_H.  Central only for normal H; when `require_central`,
// throws NonNormalSubgroup for non-normal H.
GroupRingElem e_subgroup(const Subgroup& H, bool require_central = true);

// T_H = sum of the elements of H.
GroupRingElem subgroup_sum(const Subgroup& H);

// Minimal t >= 0 such that p^t x has p-integral coefficients.
// Requires rational coefficients.
unsigned p_power_denominator(const GroupRingElem& x, unsigned long p);

// Lcm of the coefficient denominators; lcm_denominator(x) * x lies in Z[G].
// Requires rational coefficients.
Int lcm_denominator(const GroupRingElem& x);

}  // namespace gring
