#pragma once

#include <complex>

#include "gring/dirichlet.hpp"

namespace gring {

// Hurwitz zeta zeta(s, x) for real s in [-0.75, 0.75], s != 1, x in (0, 1],
// by Euler-Maclaurin summation.  Accuracy ~1e-14 on this range.
double hurwitz_zeta(double s, double x, unsigned terms = 32);

// S-truncated Dirichlet L-function L_S(chi, s) near s = 0, evaluated through
// the primitive character and explicit Euler factors at the primes of S.
std::complex<double> l_series(const DirichletChar& chi,
                              const std::vector<unsigned long>& s_primes, double s,
                              unsigned terms = 32);

struct LeadingTerm {
    std::complex<double> value;  // lim s^{-r} L_S(chi, s)
    double err = 0.0;            // reported error estimate
    unsigned order = 0;          // the r actually used
};

// Numerically detected order of vanishing of L_S(chi, s) at s = 0: the first
// Taylor coefficient with magnitude above the threshold.
unsigned detect_order(const DirichletChar& chi, const std::vector<unsigned long>& s_primes,
                      unsigned max_order, double threshold = 1e-6);

// r-th derived value L_S^r(chi, 0) = f^{(r)}(0)/r! by Richardson-extrapolated
// central differences.  Throws ArithmeticError when the numerically detected
// order differs from r.  precision_digits tunes the series depth and the
// reported error bound.
LeadingTerm leading_term_numeric(const DirichletChar& chi,
                                 const std::vector<unsigned long>& s_primes, unsigned r,
                                 unsigned precision_digits = 10);

// Taylor coefficient f^{(r)}(0)/r! of a complex-valued function of a real
// variable, with a crude error estimate from the extrapolation tail.
struct DiffResult {
    std::complex<double> value;
    double err;
};
DiffResult taylor_coefficient(const std::function<std::complex<double>(double)>& f, unsigned r,
                              double h0 = 0.1, unsigned levels = 5);

}  // namespace gring
