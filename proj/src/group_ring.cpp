#include "gring/group_ring.hpp"

#include <sstream>

#include "gring/errors.hpp"

namespace gring {

GroupRingElem GroupRingElem::zero(const FiniteGroup& G) {
    return GroupRingElem{&G, std::vector<Cyclo>(G.order(), Cyclo::zero())};
}

GroupRingElem GroupRingElem::one(const FiniteGroup& G) {
    auto x = zero(G);
    x.c[0] = Cyclo::one();
    return x;
}

GroupRingElem GroupRingElem::unit(const FiniteGroup& G, unsigned g, Cyclo scale) {
    if (g >= G.order()) throw InputError("group element index out of range");
    auto x = zero(G);
    x.c[g] = std::move(scale);
    return x;
}

bool GroupRingElem::is_zero() const {
    for (const auto& q : c)
        if (!q.is_zero()) return false;
    return true;
}

bool GroupRingElem::is_rational() const {
    for (const auto& q : c)
        if (!q.is_rational()) return false;
    return true;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r = *this;
    for (auto& q : r.c) q = -q;
    return r;
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.G != b.G) throw InputError("group ring elements over different groups");
    GroupRingElem r = a;
    for (unsigned g = 0; g < r.c.size(); ++g) r.c[g] += b.c[g];
    return r;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) { return a + (-b); }

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.G != b.G) throw InputError("group ring elements over different groups");
    const FiniteGroup& G = *a.G;
    auto r = GroupRingElem::zero(G);
    for (unsigned g = 0; g < G.order(); ++g) {
        if (a.c[g].is_zero()) continue;
        for (unsigned h = 0; h < G.order(); ++h) {
            if (b.c[h].is_zero()) continue;
            r.c[G.op(g, h)] += a.c[g] * b.c[h];
        }
    }
    return r;
}

GroupRingElem GroupRingElem::operator*(const Cyclo& s) const {
    GroupRingElem r = *this;
    for (auto& q : r.c) q *= s;
    return r;
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.G != b.G) return false;
    for (unsigned g = 0; g < a.c.size(); ++g)
        if (!(a.c[g] == b.c[g])) return false;
    return true;
}

bool GroupRingElem::is_central() const {
    const FiniteGroup& Gr = *G;
    for (unsigned x = 0; x < Gr.order(); ++x)
        for (unsigned g = 0; g < Gr.order(); ++g)
            if (!(c[g] == c[Gr.conj(g, x)])) return false;
    return true;
}

std::string GroupRingElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned g = 0; g < c.size(); ++g) {
        if (c[g].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c[g].str() << ")*" << G->label(g);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

GroupRingElem iota_sharp(const GroupRingElem& x) {
    auto r = GroupRingElem::zero(*x.G);
    for (unsigned g = 0; g < x.c.size(); ++g) r.c[x.G->inv(g)] = x.c[g];
    return r;
}

GroupRingElem e_psi(const Character& chi) {
    const FiniteGroup& G = *chi.group;
    auto r = GroupRingElem::zero(G);
    Cyclo scale(make_rat(Int(chi.degree), Int(G.order())));
    for (unsigned g = 0; g < G.order(); ++g) r.c[G.inv(g)] = chi.values[g] * scale;
    return r;
}

GroupRingElem subgroup_sum(const Subgroup& H) {
    auto r = GroupRingElem::zero(*H.parent);
    for (unsigned h : H.elems) r.c[h] = Cyclo::one();
    return r;
}

GroupRingElem e_subgroup(const Subgroup& H, bool require_central) {
    if (require_central && !H.is_normal())
        throw NonNormalSubgroup("e_H requested for a non-normal subgroup of " +
                                H.parent->name());
    return subgroup_sum(H) * Cyclo(make_rat(Int(1), Int(H.order())));
}

unsigned p_power_denominator(const GroupRingElem& x, unsigned long p) {
    if (!is_prime(p)) throw InputError("p_power_denominator requires a prime");
    unsigned t = 0;
    for (const auto& q : x.c) {
        Int den = q.rational().get_den();
        unsigned v = 0;
        while (den % (unsigned long)p == 0) {
            den /= (unsigned long)p;
            ++v;
        }
        t = std::max(t, v);
    }
    return t;
}

Int lcm_denominator(const GroupRingElem& x) {
    Int l(1);
    for (const auto& q : x.c) {
        Int den = q.rational().get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    return l;
}

}  // namespace gring
