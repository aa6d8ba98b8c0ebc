#include "gring/center.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "gring/errors.hpp"

namespace gring {

CenterElem CenterElem::zero(const CharacterTable& t) {
    return CenterElem{&t, std::vector<Cyclo>(t.size(), Cyclo::zero())};
}

CenterElem CenterElem::one(const CharacterTable& t) {
    return CenterElem{&t, std::vector<Cyclo>(t.size(), Cyclo::one())};
}

CenterElem CenterElem::indicator(const CharacterTable& t, unsigned chi_index) {
    auto x = zero(t);
    x.comp[chi_index] = Cyclo::one();
    return x;
}

CenterElem CenterElem::from_group_ring(const CharacterTable& t, const GroupRingElem& x) {
    if (&t.group() != x.G) throw InputError("table and element groups differ");
    if (!x.is_central()) throw InputError("element is not central");
    auto r = zero(t);
    for (unsigned i = 0; i < t.size(); ++i) {
        const Character& chi = t.at(i);
        Cyclo s;
        for (unsigned g = 0; g < x.c.size(); ++g) {
            if (x.c[g].is_zero()) continue;
            s += x.c[g] * chi.values[g];
        }
        r.comp[i] = s * Cyclo(make_rat(Int(1), Int(chi.degree)));
    }
    return r;
}

bool CenterElem::is_zero() const {
    for (const auto& v : comp)
        if (!v.is_zero()) return false;
    return true;
}

CenterElem CenterElem::operator-() const {
    CenterElem r = *this;
    for (auto& v : r.comp) v = -v;
    return r;
}

CenterElem operator+(const CenterElem& a, const CenterElem& b) {
    if (a.tab != b.tab) throw InputError("center elements over different tables");
    CenterElem r = a;
    for (unsigned i = 0; i < r.comp.size(); ++i) r.comp[i] += b.comp[i];
    return r;
}

CenterElem operator-(const CenterElem& a, const CenterElem& b) { return a + (-b); }

CenterElem operator*(const CenterElem& a, const CenterElem& b) {
    if (a.tab != b.tab) throw InputError("center elements over different tables");
    CenterElem r = a;
    for (unsigned i = 0; i < r.comp.size(); ++i) r.comp[i] *= b.comp[i];
    return r;
}

CenterElem CenterElem::operator*(const Cyclo& s) const {
    CenterElem r = *this;
    for (auto& v : r.comp) v *= s;
    return r;
}

bool operator==(const CenterElem& a, const CenterElem& b) {
    if (a.tab != b.tab) return false;
    for (unsigned i = 0; i < a.comp.size(); ++i)
        if (!(a.comp[i] == b.comp[i])) return false;
    return true;
}

CenterElem CenterElem::dual() const {
    CenterElem r = zero(*tab);
    for (unsigned i = 0; i < comp.size(); ++i) r.comp[tab->contragredient(i)] = comp[i];
    return r;
}

bool CenterElem::is_galois_stable() const {
    unsigned e = tab->level();
    for (unsigned k = 1; k < std::max(e, 2u); ++k) {
        if (e > 1 && gcd_long(k, e) != 1) continue;
        for (unsigned i = 0; i < comp.size(); ++i) {
            unsigned j = tab->galois_twist(i, (long)k);
            if (!(comp[j] == comp[i].galois((long)k))) return false;
        }
        if (e == 1) break;
    }
    return true;
}

GroupRingElem CenterElem::to_group_ring() const {
    const FiniteGroup& G = tab->group();
    auto r = GroupRingElem::zero(G);
    Cyclo inv_n(make_rat(Int(1), Int(G.order())));
    for (unsigned g = 0; g < G.order(); ++g) {
        Cyclo s;
        for (unsigned i = 0; i < comp.size(); ++i) {
            if (comp[i].is_zero()) continue;
            const Character& chi = tab->at(i);
            s += comp[i] * Cyclo(make_rat(Int(chi.degree), Int(1))) * chi.values[G.inv(g)];
        }
        r.c[g] = s * inv_n;
    }
    return r;
}

std::vector<Rat> CenterElem::class_coords() const {
    // rationality of every group-ring coefficient is equivalent to Galois
    // stability, so the extraction itself is the membership test
    GroupRingElem x = to_group_ring();
    const FiniteGroup& G = tab->group();
    std::vector<Rat> out(G.num_classes());
    for (unsigned c = 0; c < G.num_classes(); ++c) {
        const Cyclo& v = x.c[G.class_rep(c)];
        if (!v.is_rational())
            throw GaloisInstability("center element is not in zeta(Q[G]): " + str());
        out[c] = v.rational();
    }
    return out;
}

std::string CenterElem::str() const {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < comp.size(); ++i) {
        if (i) os << "; ";
        os << comp[i].str();
    }
    os << "]";
    return os.str();
}

Cyclo bareiss_det(std::vector<std::vector<Cyclo>> m) {
    unsigned n = (unsigned)m.size();
    if (n == 0) return Cyclo::one();
    Cyclo prev = Cyclo::one();
    bool negate = false;
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            unsigned sel = k + 1;
            while (sel < n && m[sel][k].is_zero()) ++sel;
            if (sel == n) return Cyclo::zero();
            std::swap(m[sel], m[k]);
            negate = !negate;
        }
        for (unsigned i = k + 1; i < n; ++i)
            for (unsigned j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    Cyclo det = m[n - 1][n - 1];
    return negate ? -det : det;
}

CenterElem nrd(const RepSet& reps, const std::vector<std::vector<GroupRingElem>>& M) {
    const CharacterTable& tab = *reps.table;
    unsigned d = (unsigned)M.size();
    for (const auto& row : M)
        if (row.size() != d) throw InputError("nrd requires a square matrix");
    auto out = CenterElem::zero(tab);
    for (unsigned t = 0; t < tab.size(); ++t) {
        const MatrixRep& rep = reps.reps[t];
        unsigned n = rep.dim;
        std::vector<std::vector<Cyclo>> blow(d * n, std::vector<Cyclo>(d * n, Cyclo::zero()));
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) {
                const GroupRingElem& x = M[i][j];
                for (unsigned g = 0; g < x.c.size(); ++g) {
                    if (x.c[g].is_zero()) continue;
                    for (unsigned a = 0; a < n; ++a)
                        for (unsigned b = 0; b < n; ++b) {
                            const Cyclo& rv = rep.at(g, a, b);
                            if (!rv.is_zero()) blow[i * n + a][j * n + b] += x.c[g] * rv;
                        }
                }
            }
        out.comp[t] = bareiss_det(std::move(blow));
    }
    return out;
}

void IdealGens::dedup() {
    std::set<std::string> seen;
    std::vector<CenterElem> kept;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        auto key = g.str();
        if (seen.insert(key).second) kept.push_back(std::move(g));
    }
    gens = std::move(kept);
}

IdealGens whitehead_generators(const RepSet& reps, unsigned size_bound, long coeff_bound,
                               uint64_t seed, unsigned random_samples) {
    if (size_bound < 1 || coeff_bound < 1)
        throw InputError("whitehead_generators requires positive bounds");
    const CharacterTable& tab = *reps.table;
    const FiniteGroup& G = tab.group();
    IdealGens out;
    out.tab = &tab;
    std::ostringstream meta;
    meta << "d_max=" << size_bound << ",c=" << coeff_bound;

    if (G.is_abelian()) {
        // xi(Z[G]) = Z[G] exactly; generated over Z by the group elements
        for (unsigned g = 0; g < G.order(); ++g) {
            std::vector<std::vector<GroupRingElem>> m{{GroupRingElem::unit(G, g)}};
            out.gens.push_back(nrd(reps, m));
        }
        out.xi_bound = "exact-abelian";
        out.phi_pool = "";
        out.dedup();
        return out;
    }

    // structured pool: 1x1 matrices [g], [g - h], [g + h]
    std::vector<GroupRingElem> pool;
    for (unsigned g = 0; g < G.order(); ++g) pool.push_back(GroupRingElem::unit(G, g));
    for (unsigned g = 0; g < G.order(); ++g)
        for (unsigned h = 0; h < G.order(); ++h) {
            if (g == h) continue;
            pool.push_back(GroupRingElem::unit(G, g) - GroupRingElem::unit(G, h));
            pool.push_back(GroupRingElem::unit(G, g) + GroupRingElem::unit(G, h));
        }
    for (const auto& x : pool) {
        std::vector<std::vector<GroupRingElem>> m{{x}};
        auto v = nrd(reps, m);
        if (!v.is_zero()) out.gens.push_back(std::move(v));
    }

    // seeded random square matrices up to the size bound
    std::mt19937_64 rng(seed);
    auto random_entry = [&]() {
        auto x = GroupRingElem::zero(G);
        unsigned support = 1 + rng() % 2;
        for (unsigned s = 0; s < support; ++s) {
            long coeff = (long)(rng() % (2 * (unsigned long)coeff_bound + 1)) - coeff_bound;
            x.c[rng() % G.order()] += Cyclo(coeff);
        }
        return x;
    };
    for (unsigned d = 2; d <= size_bound; ++d)
        for (unsigned s = 0; s < random_samples; ++s) {
            std::vector<std::vector<GroupRingElem>> m(
                d, std::vector<GroupRingElem>(d, GroupRingElem::zero(G)));
            for (auto& row : m)
                for (auto& e : row) e = random_entry();
            auto v = nrd(reps, m);
            if (!v.is_zero()) out.gens.push_back(std::move(v));
        }
    meta << ",samples=" << random_samples << ",seed=" << seed;
    out.xi_bound = meta.str();
    out.phi_pool = "{0,+-g,g+-h}+random";
    out.dedup();
    return out;
}

}  // namespace gring
