#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace gring {

using Int = mpz_class;
using Rat = mpq_class;

// Rational p/q in lowest terms with q > 0.
inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

// Euler phi by trial division; desk-scale n.
inline unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> ds;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % m;
        b = (__uint128_t)b * b % m;
        e >>= 1;
    }
    return r;
}

inline uint64_t mod_inv(uint64_t a, uint64_t p) {
    // p prime
    return mod_pow(a % p, p - 2, p);
}

// Smallest prime p with p = 1 (mod m) and p > lower.
inline unsigned long prime_one_mod(unsigned long m, unsigned long lower) {
    unsigned long p = (lower / m) * m + 1;
    while (p <= lower || !is_prime(p)) p += m;
    return p;
}

// A generator of (Z/p)^* for prime p.
inline uint64_t primitive_root(uint64_t p) {
    auto fac = prime_factors(p - 1);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : fac)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return 0;  // unreachable for prime p > 2
}

// Chinese remainder for two coprime moduli.
inline long crt2(long r1, long m1, long r2, long m2) {
    r1 %= m1;
    if (r1 < 0) r1 += m1;
    r2 %= m2;
    if (r2 < 0) r2 += m2;
    for (long x = r1;; x += m1)
        if (x % m2 == r2) return x % (m1 * m2);
}

}  // namespace gring
