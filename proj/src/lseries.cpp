#include "gring/lseries.hpp"

#include <cmath>
#include <functional>

#include "gring/errors.hpp"

namespace gring {

double hurwitz_zeta(double s, double x, unsigned terms) {
    if (x <= 0.0 || x > 1.0) throw InputError("hurwitz_zeta requires 0 < x <= 1");
    if (std::abs(s - 1.0) < 1e-9) throw InputError("hurwitz_zeta pole at s = 1");
    // B_2, B_4, ..., B_24
    static const double bern[] = {1.0 / 6,      -1.0 / 30,    1.0 / 42,     -1.0 / 30,
                                  5.0 / 66,     -691.0 / 2730, 7.0 / 6,     -3617.0 / 510,
                                  43867.0 / 798, -174611.0 / 330, 854513.0 / 138,
                                  -236364091.0 / 2730};
    const unsigned N = terms;
    double sum = 0.0;
    for (unsigned k = 0; k < N; ++k) sum += std::pow(x + k, -s);
    double xn = x + N;
    sum += std::pow(xn, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(xn, -s);
    // Euler-Maclaurin tail: sum_j B_{2j}/(2j)! (s)_{2j-1} xn^{-s-2j+1}
    double poch = s;              // (s)_1
    double fact = 2.0;            // (2j)! running
    double power = std::pow(xn, -s - 1.0);
    for (unsigned j = 1; j <= 12; ++j) {
        sum += bern[j - 1] / fact * poch * power;
        // advance to j+1: multiply pochhammer by (s+2j-1)(s+2j), factorial by
        // (2j+1)(2j+2), power by xn^{-2}
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        power /= xn * xn;
    }
    return sum;
}

std::complex<double> l_series(const DirichletChar& chi,
                              const std::vector<unsigned long>& s_primes, double s,
                              unsigned terms) {
    DirichletChar prim = chi.primitive();
    unsigned f = prim.modulus;
    std::complex<double> L(0.0, 0.0);
    if (f == 1) {
        L = hurwitz_zeta(s, 1.0, terms);  // Riemann zeta
    } else {
        for (unsigned a = 1; a <= f; ++a) {
            const Cyclo& v = prim(a);
            if (v.is_zero()) continue;
            L += v.to_complex() * hurwitz_zeta(s, (double)a / f, terms);
        }
        L *= std::pow((double)f, -s);
    }
    for (unsigned long p : s_primes) {
        if (f % p == 0) continue;
        L *= 1.0 - prim(p).to_complex() * std::pow((double)p, -s);
    }
    return L;
}

DiffResult taylor_coefficient(const std::function<std::complex<double>(double)>& f, unsigned r,
                              double h0, unsigned levels) {
    // central differences of accuracy O(h^2), Richardson-extrapolated
    auto stencil = [&](double h) -> std::complex<double> {
        switch (r) {
            case 0:
                return f(0.0);
            case 1:
                return (f(h) - f(-h)) / (2.0 * h);
            case 2:
                return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
            case 3:
                return (f(2 * h) - 2.0 * f(h) + 2.0 * f(-h) - f(-2 * h)) / (2.0 * h * h * h);
            case 4:
                return (f(2 * h) - 4.0 * f(h) + 6.0 * f(0.0) - 4.0 * f(-h) + f(-2 * h)) /
                       (h * h * h * h);
            default:
                throw InputError("taylor_coefficient supports orders up to 4");
        }
    };
    if (r == 0) return {f(0.0), 1e-15};
    std::vector<std::complex<double>> row;
    double h = h0;
    std::complex<double> best = stencil(h);
    row.push_back(best);
    double err = std::abs(best);
    for (unsigned lev = 1; lev < levels; ++lev) {
        h /= 2.0;
        std::vector<std::complex<double>> next;
        next.push_back(stencil(h));
        double pow4 = 4.0;
        for (unsigned k = 0; k < row.size(); ++k) {
            next.push_back((pow4 * next[k] - row[k]) / (pow4 - 1.0));
            pow4 *= 4.0;
        }
        err = std::abs(next.back() - row.back());
        row = std::move(next);
        best = row.back();
    }
    // divide by r! for the Taylor coefficient
    double fact = 1.0;
    for (unsigned i = 2; i <= r; ++i) fact *= i;
    return {best / fact, err / fact + 1e-14};
}

unsigned detect_order(const DirichletChar& chi, const std::vector<unsigned long>& s_primes,
                      unsigned max_order, double threshold) {
    auto f = [&](double s) { return l_series(chi, s_primes, s); };
    for (unsigned j = 0; j <= max_order && j <= 4; ++j) {
        auto c = taylor_coefficient(f, j);
        if (std::abs(c.value) > threshold) return j;
    }
    return max_order + 1;
}

LeadingTerm leading_term_numeric(const DirichletChar& chi,
                                 const std::vector<unsigned long>& s_primes, unsigned r,
                                 unsigned precision_digits) {
    unsigned terms = std::max(32u, precision_digits * 4);
    unsigned detected = detect_order(chi, s_primes, r + 1);
    if (detected != r)
        throw ArithmeticError("stated order " + std::to_string(r) +
                              " does not match the detected order " + std::to_string(detected));
    auto f = [&](double s) { return l_series(chi, s_primes, s, terms); };
    auto c = taylor_coefficient(f, r, 0.1, precision_digits >= 12 ? 6 : 5);
    LeadingTerm out;
    out.value = c.value;
    out.err = c.err;
    out.order = r;
    return out;
}

}  // namespace gring
