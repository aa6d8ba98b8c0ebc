#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gring/numutil.hpp"

namespace gring {

// Exact element of the cyclotomic field Q(zeta_n), stored in the power basis
// {zeta_n^k : 0 <= k < phi(n)} modulo the n-th cyclotomic polynomial.
// Every arithmetic result is reduced before storage, so equality at a common
// level is a plain coefficient comparison.  Level 1 is Q itself.
class Cyclo {
public:
    Cyclo() : level_(1), c_(1, Rat(0)) {}
    explicit Cyclo(Rat q) : level_(1), c_(1, std::move(q)) {}
    explicit Cyclo(long n) : level_(1), c_(1, Rat(n)) {}
    Cyclo(unsigned level, std::vector<Rat> coeffs);

    // zeta_n^k
    static Cyclo root_of_unity(unsigned n, long k);
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(1L); }

    unsigned level() const { return level_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Value as a rational; requires is_rational().
    Rat rational() const;

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    // Throws ArithmeticError on division by zero.
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

    Cyclo inverse() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Image under zeta |-> zeta^k; requires gcd(k, level) = 1.
    Cyclo galois(long k) const;
    // Complex conjugate (zeta |-> zeta^{-1}).
    Cyclo conj() const { return galois(-1); }

    // Re-express at level m; requires level() | m.
    Cyclo at_level(unsigned m) const;
    // Smallest-level representation among divisors of the current level.
    Cyclo reduced_level() const;

    // Numeric embedding zeta_n |-> exp(2*pi*i/n).  The layer is double
    // precision; the digit count states the accuracy the caller relies on
    // and must be at least 15 (the double-precision guarantee).
    std::complex<double> to_complex() const;
    std::complex<double> to_complex(unsigned precision_digits) const;

    // Deterministic text form, e.g. "1/2 + -1/3*z8^2" ("0" for zero).
    std::string str() const;

private:
    unsigned level_;
    std::vector<Rat> c_;  // size euler_phi(level_)

    void unify(Cyclo& a, Cyclo& b) const;
};

// Continued-fraction rational reconstruction: p/q with q <= max_den and
// |z - p/q| < 1/(2*q*max_den), if such an approximation exists.
std::optional<Rat> rational_reconstruct(double z, unsigned long max_den);

// Monic integer coefficient list of the n-th cyclotomic polynomial,
// degree phi(n), constant term first (cached).
const std::vector<Int>& cyclotomic_polynomial(unsigned n);

}  // namespace gring
