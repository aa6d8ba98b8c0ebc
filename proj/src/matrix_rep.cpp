#include "gring/matrix_rep.hpp"

#include <algorithm>
#include <map>

#include "gring/errors.hpp"

namespace gring {

Cyclo MatrixRep::trace(unsigned g) const {
    Cyclo t;
    for (unsigned i = 0; i < dim; ++i) t += at(g, i, i);
    return t;
}

void MatrixRep::validate(const Character& chi) const {
    const FiniteGroup& G = *group;
    if (chi.degree != dim) throw ArithmeticError("representation dimension mismatch");
    for (unsigned g = 0; g < G.order(); ++g)
        if (!(trace(g) == chi.values[g]))
            throw ArithmeticError("representation trace differs from character");
    for (unsigned g = 0; g < G.order(); ++g)
        for (unsigned h = 0; h < G.order(); ++h) {
            unsigned gh = G.op(g, h);
            for (unsigned i = 0; i < dim; ++i)
                for (unsigned j = 0; j < dim; ++j) {
                    Cyclo acc;
                    for (unsigned k = 0; k < dim; ++k) acc += at(g, i, k) * at(h, k, j);
                    if (!(acc == at(gh, i, j)))
                        throw ArithmeticError("representation is not multiplicative");
                }
        }
}

namespace {

// chi induced from a linear character lam of H (given on H's own indices).
std::vector<Cyclo> induced_values(const FiniteGroup& G, const Subgroup& H,
                                  const std::vector<unsigned>& h_embed,
                                  const std::vector<Cyclo>& lam) {
    std::map<unsigned, unsigned> h_pos;
    for (unsigned i = 0; i < h_embed.size(); ++i) h_pos[h_embed[i]] = i;
    Rat inv_h = make_rat(Int(1), Int(H.order()));
    std::vector<Cyclo> vals(G.order());
    for (unsigned g = 0; g < G.order(); ++g) {
        Cyclo s;
        for (unsigned x = 0; x < G.order(); ++x) {
            unsigned y = G.op(G.op(G.inv(x), g), x);  // x^{-1} g x
            auto it = h_pos.find(y);
            if (it != h_pos.end()) s += lam[it->second];
        }
        vals[g] = s * Cyclo(inv_h);
    }
    return vals;
}

}  // namespace

std::vector<MatrixRep> monomial_irreps(const CharacterTable& table) {
    const FiniteGroup& G = table.group();
    unsigned n = G.order();
    std::vector<MatrixRep> out(table.size());
    std::vector<bool> done(table.size(), false);

    // linear characters are their own 1x1 representations
    for (unsigned t = 0; t < table.size(); ++t) {
        if (table.at(t).degree != 1) continue;
        MatrixRep rep;
        rep.group = &G;
        rep.dim = 1;
        rep.mats.resize(n);
        for (unsigned g = 0; g < n; ++g) rep.mats[g] = {table.at(t).values[g]};
        out[t] = std::move(rep);
        done[t] = true;
    }
    if (std::all_of(done.begin(), done.end(), [](bool b) { return b; })) return out;

    auto subgroups = all_subgroups(G);
    for (unsigned t = 0; t < table.size(); ++t) {
        if (done[t]) continue;
        const Character& chi = table.at(t);
        unsigned d = chi.degree;
        bool found = false;
        for (const auto& H : subgroups) {
            if (H.order() * d != n || found) continue;
            auto [Hgrp, embed] = subgroup_as_group(G, H);
            CharacterTable Htab(Hgrp);
            for (unsigned lt = 0; lt < Htab.size() && !found; ++lt) {
                if (Htab.at(lt).degree != 1) continue;
                std::vector<Cyclo> lam = Htab.at(lt).values;
                auto ind = induced_values(G, H, embed, lam);
                bool match = true;
                for (unsigned g = 0; g < n && match; ++g)
                    if (!(ind[g] == chi.values[g])) match = false;
                if (!match) continue;

                // left coset representatives, ordered by minimal element
                std::map<unsigned, unsigned> h_pos;
                for (unsigned i = 0; i < embed.size(); ++i) h_pos[embed[i]] = i;
                std::vector<unsigned> coset_min(n, n);
                for (unsigned g = 0; g < n; ++g) {
                    unsigned m = n;
                    for (unsigned h : H.elems) m = std::min(m, G.op(g, h));
                    coset_min[g] = m;
                }
                std::vector<unsigned> reps_list;
                for (unsigned g = 0; g < n; ++g)
                    if (coset_min[g] == g) reps_list.push_back(g);

                MatrixRep rep;
                rep.group = &G;
                rep.dim = d;
                rep.mats.assign(n, std::vector<Cyclo>(d * (size_t)d, Cyclo::zero()));
                for (unsigned g = 0; g < n; ++g)
                    for (unsigned i = 0; i < d; ++i)
                        for (unsigned j = 0; j < d; ++j) {
                            unsigned y = G.op(G.op(G.inv(reps_list[i]), g), reps_list[j]);
                            auto it = h_pos.find(y);
                            if (it != h_pos.end())
                                rep.mats[g][i * d + j] = lam[it->second];
                        }
                rep.validate(chi);
                out[t] = std::move(rep);
                done[t] = true;
                found = true;
            }
        }
        if (!found)
            throw NotMonomial("no inducing (subgroup, linear character) pair for character #" +
                                  std::to_string(t) + " of " + G.name(),
                              t);
    }
    return out;
}

RepSet RepSet::build(const CharacterTable& table) {
    RepSet rs;
    rs.table = &table;
    rs.reps = monomial_irreps(table);
    return rs;
}

RepSet RepSet::external(const CharacterTable& table, std::vector<MatrixRep> reps) {
    if (reps.size() != table.size())
        throw InputError("external representation count does not match the table");
    for (unsigned t = 0; t < table.size(); ++t) reps[t].validate(table.at(t));
    RepSet rs;
    rs.table = &table;
    rs.reps = std::move(reps);
    return rs;
}

}  // namespace gring
