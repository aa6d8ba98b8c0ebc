#pragma once

#include <complex>
#include <map>
#include <memory>

#include "gring/center.hpp"
#include "gring/dirichlet.hpp"
#include "gring/places.hpp"

namespace gring {

// Element of zeta(C[G]) whose components are individually tagged exact
// (a cyclotomic number) or numeric (complex double with an error bound).
// Exact and numeric tags never mix inside one exact comparison.
struct CenterValue {
    struct Comp {
        bool exact = true;
        Cyclo val;                        // when exact
        std::complex<double> num{0, 0};   // when numeric
        double err = 0.0;

        std::complex<double> embed() const { return exact ? val.to_complex() : num; }
        bool is_exact_zero() const { return exact && val.is_zero(); }
    };

    const CharacterTable* tab = nullptr;
    std::vector<Comp> comp;

    static CenterValue zero(const CharacterTable& t);
    static CenterValue from_exact(const CenterElem& e);

    bool all_exact() const;
    // The exact element; throws ArithmeticError when a component is numeric.
    CenterElem exact() const;

    friend CenterValue operator*(const CenterValue& a, const CenterValue& b);
    friend CenterValue operator*(const CenterValue& a, const CenterElem& b);
};

// Order of vanishing of L_S(chi, s) at s = 0 by the fixed-space count:
// sum_v dim H^0(G_v, V_chi) for nontrivial chi, |S| - 1 for the trivial one.
// Throws ArithmeticError when the character sum is not a nonnegative integer.
unsigned ord_vanishing(const Character& chi, const SConfig& cfg);

// Source of L-values: exact Dirichlet data (abelian over Q) and/or a numeric
// leading-term table keyed by character index.
struct LSource {
    // Dirichlet characters aligned with the character table order, plus the
    // finite places of S as rational primes (the cyclotomic instantiation).
    std::vector<DirichletChar> dchars;
    std::vector<unsigned long> s_primes;
    bool has_dirichlet = false;

    struct TableEntry {
        unsigned order = 0;
        std::complex<double> leading{0, 0};
        double err = 0.0;
    };
    std::map<unsigned, TableEntry> table;  // char index -> leading term

    unsigned precision_digits = 10;
};

// theta^{<a>} and theta^{(a)} at s = 0.  Components are exact where the
// required derived order is zero (Dirichlet value) or where the L-function
// vanishes beyond the required order; numeric components come from the table
// or from Hurwitz-zeta differentiation of the Dirichlet data.
struct ThetaResult {
    CenterValue bracket;  // theta^{<a>}: per-character derived values
    CenterValue round;    // theta^{(a)}: restricted to G_{(a),S}
};
ThetaResult theta_a(const CharacterTable& tab, unsigned a, const SConfig& cfg,
                    const LSource& src);

// gamma_T = prod_{v in T} Nrd(1 - sigma_v^{-1} Nv), exact and verified
// componentwise invertible.  Throws InadmissibleT on missing data or a zero
// component.
CenterElem gamma_T(const RepSet& reps, const SConfig& cfg);

// Group-ring coefficients of an exact center value; integrality check helper.
struct IntegralityReport {
    bool integral = false;
    GroupRingElem element;  // gamma_T * theta^{<0>} as a group-ring element
};
IntegralityReport stickelberger_integrality(const RepSet& reps, const SConfig& cfg,
                                            const LSource& src);

}  // namespace gring
