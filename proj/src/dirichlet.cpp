#include "gring/dirichlet.hpp"

#include "gring/character.hpp"
#include "gring/errors.hpp"
#include "gring/group.hpp"

namespace gring {

bool DirichletChar::is_principal() const {
    for (unsigned a = 0; a < modulus; ++a) {
        if (gcd_long(a == 0 ? modulus : a, modulus) != 1) continue;
        if (!(values[a] == Cyclo::one())) return false;
    }
    return true;
}

bool DirichletChar::is_odd() const {
    return values[(modulus - 1) % modulus] == -Cyclo::one();
}

void DirichletChar::validate() const {
    if (values.size() != modulus) throw InputError("Dirichlet character has wrong value count");
    for (unsigned a = 0; a < modulus; ++a) {
        bool unit = gcd_long(a == 0 ? modulus : a, modulus) == 1;
        if (!unit) {
            if (!values[a].is_zero())
                throw InputError("Dirichlet character nonzero off the unit group");
            continue;
        }
        if (values[a].is_zero()) throw InputError("Dirichlet character vanishes on a unit");
        for (unsigned b = 0; b < modulus; ++b) {
            if (gcd_long(b == 0 ? modulus : b, modulus) != 1) continue;
            if (!(values[(a * (unsigned long)b) % modulus] == values[a] * values[b]))
                throw InputError("Dirichlet character is not multiplicative");
        }
    }
    if (!(values[1 % modulus] == Cyclo::one()))
        throw InputError("Dirichlet character does not send 1 to 1");
}

unsigned DirichletChar::conductor() const {
    for (unsigned f : divisors(modulus)) {
        // factors through (Z/f)^x iff trivial on {a = 1 mod f} n units(m)
        bool ok = true;
        for (unsigned a = 1; a < modulus && ok; ++a) {
            if (gcd_long(a, modulus) != 1 || a % f != 1 % f) continue;
            if (!(values[a] == Cyclo::one())) ok = false;
        }
        if (ok) return f;
    }
    return modulus;
}

DirichletChar DirichletChar::primitive() const {
    unsigned f = conductor();
    DirichletChar prim;
    prim.modulus = f;
    prim.values.assign(f, Cyclo::zero());
    for (unsigned a = 0; a < f; ++a) {
        if (gcd_long(a == 0 ? f : a, f) != 1) continue;
        // lift a to a unit mod m congruent to a mod f
        unsigned long lift = a;
        while (gcd_long(lift % modulus == 0 ? modulus : (long)(lift % modulus), modulus) != 1)
            lift += f;
        prim.values[a] = values[lift % modulus];
    }
    return prim;
}

std::vector<DirichletChar> dirichlet_characters(unsigned m) {
    // the unit group as a table-backed group, identity (residue 1) first
    std::vector<unsigned long> residues;
    for (unsigned a = 1; a <= m; ++a)
        if (gcd_long(a % m == 0 ? m : a, m) == 1) residues.push_back(a % m);
    if (m == 1) residues = {0};
    unsigned n = (unsigned)residues.size();
    std::vector<unsigned> index_of(m, n);
    for (unsigned i = 0; i < n; ++i) index_of[residues[i]] = i;
    std::vector<unsigned> mul(n * (size_t)n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            mul[i * (size_t)n + j] = index_of[(residues[i] * residues[j]) % m];
    FiniteGroup U("U" + std::to_string(m), n, std::move(mul));
    CharacterTable tab(U);
    std::vector<DirichletChar> out;
    for (unsigned t = 0; t < tab.size(); ++t) {
        DirichletChar chi;
        chi.modulus = m;
        chi.values.assign(m, Cyclo::zero());
        for (unsigned i = 0; i < n; ++i) chi.values[residues[i] % m] = tab.at(t).values[i];
        if (m == 1) chi.values[0] = Cyclo::one();
        chi.validate();
        out.push_back(std::move(chi));
    }
    return out;
}

Cyclo gen_bernoulli(const DirichletChar& chi) {
    if (chi.is_principal())
        throw InputError("B_{1,chi} requested for the principal character");
    Cyclo s;
    for (unsigned a = 1; a <= chi.modulus; ++a) {
        const Cyclo& v = chi(a);
        if (!v.is_zero()) s += v * Cyclo((long)a);
    }
    return s * Cyclo(make_rat(Int(1), Int(chi.modulus)));
}

Cyclo l_value_at_zero(const DirichletChar& chi, const std::vector<unsigned long>& s_primes) {
    DirichletChar prim = chi.primitive();
    for (unsigned long p : prime_factors(prim.modulus)) {
        bool found = false;
        for (unsigned long q : s_primes)
            if (q == p) found = true;
        if (!found)
            throw InputError("S must contain the ramified prime " + std::to_string(p));
    }
    Cyclo base;
    if (chi.is_principal())
        base = Cyclo(make_rat(Int(-1), Int(2)));
    else if (prim.is_odd())
        base = -gen_bernoulli(prim);
    else
        base = Cyclo::zero();
    for (unsigned long p : s_primes) {
        if (prim.modulus % p == 0) continue;
        base *= (Cyclo::one() - prim(p));
    }
    return base;
}

}  // namespace gring
