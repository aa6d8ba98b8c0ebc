#include "gring/cyclotomic.hpp"

#include <algorithm>

#include "gring/errors.hpp"

namespace gring {

unsigned CyclotomicSetup::index_of_residue(unsigned long r) const {
    for (unsigned i = 0; i < residues.size(); ++i)
        if (residues[i] == r % m) return i;
    throw InputError("residue " + std::to_string(r) + " is not a unit mod " +
                     std::to_string(m));
}

CyclotomicSetup cyclotomic_setup(unsigned m, const std::vector<unsigned long>& s_extra,
                                 const std::vector<unsigned long>& t_primes) {
    if (m < 3) throw InputError("cyclotomic setup requires m >= 3");
    CyclotomicSetup out;
    out.m = m;

    for (unsigned long a = 1; a < m; ++a)
        if (gcd_long((long)a, m) == 1) out.residues.push_back(a);
    unsigned n = (unsigned)out.residues.size();
    std::vector<unsigned> index_of(m, n);
    for (unsigned i = 0; i < n; ++i) index_of[out.residues[i]] = i;
    std::vector<unsigned> mul(n * (size_t)n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            mul[i * (size_t)n + j] = index_of[(out.residues[i] * out.residues[j]) % m];
    std::vector<std::string> labels;
    for (unsigned long r : out.residues) labels.push_back("s" + std::to_string(r));
    out.group = std::make_unique<FiniteGroup>("GalQ(zeta" + std::to_string(m) + ")", n,
                                              std::move(mul), std::move(labels));
    out.table = std::make_unique<CharacterTable>(*out.group);
    out.reps = RepSet::build(*out.table);

    const FiniteGroup& G = *out.group;
    out.cfg.G = &G;

    // archimedean place: complex conjugation
    PlaceDatum inf;
    inf.label = "inf";
    inf.archimedean = true;
    inf.decomp = subgroup_closure(G, {out.index_of_residue(m - 1)});
    out.cfg.S.push_back(std::move(inf));

    auto ram = prime_factors(m);
    std::vector<unsigned long> s_primes(ram.begin(), ram.end());
    for (unsigned long p : s_extra)
        if (std::find(s_primes.begin(), s_primes.end(), p) == s_primes.end())
            s_primes.push_back(p);
    std::sort(s_primes.begin(), s_primes.end());

    for (unsigned long p : s_primes) {
        PlaceDatum pd;
        pd.label = "p" + std::to_string(p);
        if (m % p == 0) {
            // D_p = {a : a mod m' lies in <p>}, m = p^k m'
            unsigned long mprime = m;
            while (mprime % p == 0) mprime /= p;
            std::vector<unsigned long> frob_orbit{1 % mprime};
            if (mprime > 1) {
                unsigned long x = p % mprime;
                while (x != 1 % mprime) {
                    frob_orbit.push_back(x);
                    x = (x * p) % mprime;
                }
            }
            std::vector<unsigned> members;
            for (unsigned i = 0; i < n; ++i) {
                unsigned long r = out.residues[i] % mprime;
                if (std::find(frob_orbit.begin(), frob_orbit.end(), r) != frob_orbit.end())
                    members.push_back(i);
            }
            pd.decomp = subgroup_closure(G, members);
        } else {
            pd.decomp = subgroup_closure(G, {out.index_of_residue(p % m)});
            pd.frobenius = out.index_of_residue(p % m);
            pd.norm = (long)p;
        }
        out.cfg.S.push_back(std::move(pd));
    }

    for (unsigned long q : t_primes) {
        if (m % q == 0)
            throw InputError("T-prime " + std::to_string(q) + " ramifies in Q(zeta_m)");
        if (std::find(s_primes.begin(), s_primes.end(), q) != s_primes.end())
            throw InputError("T-prime " + std::to_string(q) + " already lies in S");
        PlaceDatum pd;
        pd.label = "q" + std::to_string(q);
        pd.decomp = subgroup_closure(G, {out.index_of_residue(q % m)});
        pd.frobenius = out.index_of_residue(q % m);
        pd.norm = (long)q;
        out.cfg.T.push_back(std::move(pd));
    }
    out.cfg.validate();

    // Dirichlet characters aligned with the table: chi(residue) = value at
    // the corresponding group element
    out.lsource.has_dirichlet = true;
    out.lsource.s_primes = s_primes;
    for (unsigned t = 0; t < out.table->size(); ++t) {
        DirichletChar chi;
        chi.modulus = m;
        chi.values.assign(m, Cyclo::zero());
        for (unsigned i = 0; i < n; ++i)
            chi.values[out.residues[i]] = out.table->at(t).values[i];
        chi.validate();
        out.lsource.dchars.push_back(std::move(chi));
    }
    return out;
}

}  // namespace gring
