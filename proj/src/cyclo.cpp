#include "gring/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "gring/errors.hpp"

namespace gring {

namespace {

// Quotient of exact polynomial division over Z (constant term first).
std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> quo(num.size() - den.size() + 1, Int(0));
    for (int i = (int)quo.size() - 1; i >= 0; --i) {
        Int q = rem[i + den.size() - 1] / den.back();
        quo[i] = q;
        if (q != 0)
            for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
    }
    return quo;
}

struct LevelData {
    std::vector<Int> phi_poly;            // cyclotomic polynomial, degree d
    std::vector<std::vector<Int>> red;    // zeta^j in power basis, phi(n) <= j < n
};

const LevelData& level_data(unsigned n) {
    static std::map<unsigned, LevelData> cache;
    static std::recursive_mutex mu;  // Phi_n construction recurses into divisors
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> poly;
    if (n == 1) {
        poly = {Int(-1), Int(1)};  // x - 1
    } else {
        std::vector<Int> num(n + 1, Int(0));
        num[0] = -1;
        num[n] = 1;
        for (unsigned d : divisors(n))
            if (d < n) num = poly_div_exact(num, level_data(d).phi_poly);
        poly = num;
    }

    LevelData data;
    data.phi_poly = poly;
    unsigned deg = poly.size() - 1;
    // zeta^deg = -sum_{k<deg} poly[k] zeta^k (monic), then multiply by zeta.
    std::vector<Int> row(deg);
    for (unsigned k = 0; k < deg; ++k) row[k] = -poly[k];
    for (unsigned j = deg; j < n; ++j) {
        data.red.push_back(row);
        std::vector<Int> next(deg, Int(0));
        for (unsigned k = 0; k + 1 < deg; ++k) next[k + 1] = row[k];
        Int top = row[deg - 1];
        if (top != 0)
            for (unsigned k = 0; k < deg; ++k) next[k] -= top * poly[k];
        row = next;
    }
    auto [pos, inserted] = cache.emplace(n, std::move(data));
    (void)inserted;
    return pos->second;
}

// Accumulate q * zeta^e into res (length phi(n)); e reduced mod n.
void add_power(std::vector<Rat>& res, unsigned n, unsigned deg, long e, const Rat& q) {
    if (q == 0) return;
    long em = e % (long)n;
    if (em < 0) em += n;
    if ((unsigned)em < deg) {
        res[em] += q;
    } else {
        const auto& row = level_data(n).red[em - deg];
        for (unsigned k = 0; k < deg; ++k)
            if (row[k] != 0) res[k] += q * Rat(row[k]);
    }
}

// Polynomial arithmetic over Q for the inverse (constant term first).
using QPoly = std::vector<Rat>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// Divide a by b, returning (quotient, remainder).
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    QPoly q;
    qp_trim(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qp_trim(a);
    }
    return {q, a};
}

}  // namespace

Cyclo::Cyclo(unsigned level, std::vector<Rat> coeffs) : level_(level), c_(std::move(coeffs)) {
    if (level_ == 0) throw InputError("cyclotomic level must be positive");
    if (c_.size() != euler_phi(level_))
        throw InputError("coefficient count does not match phi(level)");
}

Cyclo Cyclo::root_of_unity(unsigned n, long k) {
    if (n == 0) throw InputError("cyclotomic level must be positive");
    unsigned deg = euler_phi(n);
    std::vector<Rat> c(deg, Rat(0));
    add_power(c, n, deg, k, Rat(1));
    return Cyclo(n, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational() const {
    if (!is_rational()) throw ArithmeticError("value is not rational: " + str());
    return c_[0];
}

Cyclo Cyclo::at_level(unsigned m) const {
    if (m == level_) return *this;
    if (m % level_ != 0) throw ArithmeticError("target level not a multiple of current level");
    unsigned deg = euler_phi(m), step = m / level_;
    std::vector<Rat> out(deg, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) add_power(out, m, deg, (long)(k * step), c_[k]);
    return Cyclo(m, std::move(out));
}

void Cyclo::unify(Cyclo& a, Cyclo& b) const {
    unsigned m = (unsigned)lcm_long(a.level_, b.level_);
    a = a.at_level(m);
    b = b.at_level(m);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo x = a, y = b;
    x.unify(x, y);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    Cyclo x = a, y = b;
    x.unify(x, y);
    unsigned n = x.level_, deg = (unsigned)x.c_.size();
    std::vector<Rat> out(deg, Rat(0));
    for (unsigned i = 0; i < deg; ++i) {
        if (x.c_[i] == 0) continue;
        for (unsigned j = 0; j < deg; ++j) {
            if (y.c_[j] == 0) continue;
            add_power(out, n, deg, (long)i + (long)j, x.c_[i] * y.c_[j]);
        }
    }
    return Cyclo(n, std::move(out));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero in Q(zeta)");
    if (is_rational()) return Cyclo(Rat(1) / c_[0]).at_level(level_);
    // Extended Euclid in Q[x]: u*f + v*Phi = 1, so u = f^{-1} mod Phi.
    QPoly f(c_.begin(), c_.end());
    qp_trim(f);
    const auto& ipoly = cyclotomic_polynomial(level_);
    QPoly g(ipoly.size());
    for (size_t i = 0; i < ipoly.size(); ++i) g[i] = Rat(ipoly[i]);

    QPoly r0 = g, r1 = f, s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = qp_divmod(r0, r1);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since Phi is irreducible over Q)
    if (r0.size() != 1) throw ArithmeticError("cyclotomic inverse: gcd not constant");
    unsigned deg = (unsigned)c_.size();
    std::vector<Rat> out(deg, Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] / r0[0];
    return Cyclo(level_, std::move(out));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
    Cyclo x = a, y = b;
    x.unify(x, y);
    return x.c_ == y.c_;
}

Cyclo Cyclo::galois(long k) const {
    long n = (long)level_;
    long km = k % n;
    if (km < 0) km += n;
    if (gcd_long(km == 0 ? n : km, n) != 1)
        throw ArithmeticError("galois exponent not coprime to level");
    unsigned deg = (unsigned)c_.size();
    std::vector<Rat> out(deg, Rat(0));
    for (unsigned i = 0; i < deg; ++i) add_power(out, level_, deg, (long)i * km, c_[i]);
    return Cyclo(level_, std::move(out));
}

Cyclo Cyclo::reduced_level() const {
    for (unsigned d : divisors(level_)) {
        if (d == level_) break;
        // stable under Gal(Q(zeta_n)/Q(zeta_d)) = {k = 1 mod d, gcd(k,n)=1}?
        bool stable = true;
        for (unsigned k = 1; k < level_ && stable; ++k) {
            if (gcd_long(k, level_) != 1 || k % d != 1) continue;
            if (galois((long)k) != *this) stable = false;
        }
        if (!stable) continue;
        // Solve for coordinates in the embedded power basis of Q(zeta_d).
        unsigned dd = euler_phi(d), nn = (unsigned)c_.size();
        std::vector<std::vector<Rat>> cols;
        for (unsigned k = 0; k < dd; ++k)
            cols.push_back(Cyclo::root_of_unity(d, (long)k).at_level(level_).c_);
        // Gaussian elimination on the nn x dd system  cols * x = c_.
        std::vector<std::vector<Rat>> m(nn, std::vector<Rat>(dd + 1, Rat(0)));
        for (unsigned i = 0; i < nn; ++i) {
            for (unsigned j = 0; j < dd; ++j) m[i][j] = cols[j][i];
            m[i][dd] = c_[i];
        }
        std::vector<int> pivot_col(nn, -1);
        unsigned row = 0;
        for (unsigned col = 0; col < dd && row < nn; ++col) {
            unsigned sel = row;
            while (sel < nn && m[sel][col] == 0) ++sel;
            if (sel == nn) continue;
            std::swap(m[sel], m[row]);
            for (unsigned i = 0; i < nn; ++i) {
                if (i == row || m[i][col] == 0) continue;
                Rat f = m[i][col] / m[row][col];
                for (unsigned j = col; j <= dd; ++j) m[i][j] -= f * m[row][j];
            }
            pivot_col[row] = (int)col;
            ++row;
        }
        bool consistent = true;
        for (unsigned i = row; i < nn; ++i)
            if (m[i][dd] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<Rat> sol(dd, Rat(0));
        for (unsigned i = 0; i < row; ++i)
            sol[pivot_col[i]] = m[i][dd] / m[i][pivot_col[i]];
        return Cyclo(d, std::move(sol));
    }
    return *this;
}

std::complex<double> Cyclo::to_complex(unsigned precision_digits) const {
    if (precision_digits < 15)
        throw InputError("to_complex requires a precision of at least 15 digits");
    if (precision_digits > 17)
        throw InputError("the numeric layer is double precision; at most 17 digits");
    return to_complex();
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double tau = 2.0 * 3.14159265358979323846;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        double q = c_[k].get_d();
        double ang = tau * (double)k / (double)level_;
        z += q * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << c_[k].get_str();
        if (k > 0) os << "*z" << level_ << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::optional<Rat> rational_reconstruct(double z, unsigned long max_den) {
    if (max_den < 1 || !std::isfinite(z)) return std::nullopt;
    // Walk the convergents of the continued fraction of z.  A convergent p/q
    // is accepted only if q <= max_den, |z - p/q| < 1/(2*q*max_den), and the
    // continued fraction gives evidence of true rationality: the next partial
    // quotient is large (or the expansion terminates).  The last condition
    // keeps irrational inputs such as pi from being matched to incidental
    // good approximations like 22/7.
    double x = z;
    Int p0((long)std::floor(x)), q0(1);  // current convergent
    Int p1(1), q1(0);                    // previous convergent
    for (int iter = 0; iter < 64; ++iter) {
        double frac = x - std::floor(x);
        bool terminated = frac < 1e-12;
        double next_quot = terminated ? 0.0 : 1.0 / frac;
        if (q0 <= (long)max_den) {
            Rat cand = make_rat(p0, q0);
            double err = std::abs(z - cand.get_d());
            double window = 1.0 / (2.0 * cand.get_den().get_d() * (double)max_den);
            if (err < window && (terminated || next_quot > 2.0 * (double)max_den))
                return cand;
        }
        if (terminated || q0 > (long)max_den) break;
        x = next_quot;
        Int a((long)std::floor(x));
        Int p2 = a * p0 + p1, q2 = a * q0 + q1;
        p1 = p0;
        q1 = q0;
        p0 = p2;
        q0 = q2;
    }
    return std::nullopt;
}

const std::vector<Int>& cyclotomic_polynomial(unsigned n) { return level_data(n).phi_poly; }

}  // namespace gring
