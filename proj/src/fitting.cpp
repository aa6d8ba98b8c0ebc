#include "gring/fitting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "gring/errors.hpp"
#include "gring/lattice.hpp"

namespace gring {

void PresentationMatrix::validate() const {
    if (!G) throw InputError("presentation matrix without a group");
    if (d < dp)
        throw InputError("presentation matrix requires d >= d' (rows >= columns): " + label);
    if (entries.size() != d) throw InputError("row count mismatch in matrix " + label);
    for (const auto& row : entries) {
        if (row.size() != dp) throw InputError("column count mismatch in matrix " + label);
        for (const auto& e : row) {
            if (e.G != G) throw InputError("entry over a foreign group in matrix " + label);
            for (const auto& c : e.c)
                if (!c.is_rational() || c.rational().get_den() != 1)
                    throw InputError("matrix " + label + " has a non-integral entry");
        }
    }
}

std::string PhiPool::descriptor() const {
    std::ostringstream os;
    os << "phi{c<=" << coeff_bound << ",support<=" << max_support;
    if (random_samples) os << ",random=" << random_samples << ",seed=" << seed;
    os << "}";
    return os.str();
}

std::vector<std::vector<GroupRingElem>> PhiPool::vectors(const FiniteGroup& G,
                                                         unsigned len) const {
    std::vector<std::vector<GroupRingElem>> out;
    std::vector<GroupRingElem> monomials;
    for (unsigned g = 0; g < G.order(); ++g)
        for (long c = 1; c <= coeff_bound; ++c) {
            monomials.push_back(GroupRingElem::unit(G, g, Cyclo(c)));
            monomials.push_back(GroupRingElem::unit(G, g, Cyclo(-c)));
        }
    // support-s vectors, s = 1..max_support
    std::vector<unsigned> positions;
    std::function<void(unsigned, unsigned, std::vector<GroupRingElem>&)> rec =
        [&](unsigned start, unsigned remaining, std::vector<GroupRingElem>& cur) {
            if (remaining == 0) {
                out.push_back(cur);
                return;
            }
            for (unsigned p = start; p < len; ++p)
                for (const auto& m : monomials) {
                    cur[p] = m;
                    rec(p + 1, remaining - 1, cur);
                    cur[p] = GroupRingElem::zero(G);
                }
        };
    std::vector<GroupRingElem> cur(len, GroupRingElem::zero(G));
    for (unsigned s = 1; s <= max_support && s <= len; ++s) rec(0, s, cur);
    // seeded dense samples
    std::mt19937_64 rng(seed);
    for (unsigned r = 0; r < random_samples; ++r) {
        std::vector<GroupRingElem> v(len, GroupRingElem::zero(G));
        for (auto& e : v) {
            long c = (long)(rng() % (2 * (unsigned long)coeff_bound + 1)) - coeff_bound;
            if (c != 0) e = GroupRingElem::unit(G, rng() % G.order(), Cyclo(c));
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

void check_caps(const PresentationMatrix& M, unsigned a, const MinorCaps& caps) {
    if (caps.override_caps) return;
    if (M.d > caps.max_dim || M.dp > caps.max_dim)
        throw CapExceeded("matrix dimensions exceed the default cap (" +
                          std::to_string(caps.max_dim) + "); pass an explicit override");
    if (a > caps.max_a)
        throw CapExceeded("a exceeds the default cap (" + std::to_string(caps.max_a) +
                          "); pass an explicit override");
    if (M.G->order() > caps.max_group)
        throw CapExceeded("group order exceeds the default cap (" +
                          std::to_string(caps.max_group) + "); pass an explicit override");
}

std::vector<std::vector<unsigned>> subsets(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    if (k > n) return out;
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        if (k == 0) break;
        int i = (int)k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

using Mat = std::vector<std::vector<GroupRingElem>>;

// rows R of M', all columns
Mat take_rows(const Mat& m, const std::vector<unsigned>& rows) {
    Mat out;
    for (unsigned r : rows) out.push_back(m[r]);
    return out;
}

// square submatrix rows R, columns C
Mat take_sub(const Mat& m, const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) {
    Mat out;
    for (unsigned r : rows) {
        std::vector<GroupRingElem> row;
        for (unsigned c : cols) row.push_back(m[r][c]);
        out.push_back(row);
    }
    return out;
}

// sign-normalize an exact central generator so that x and -x deduplicate
CenterElem normalize_sign(CenterElem z) {
    std::vector<Rat> coords;
    try {
        coords = z.class_coords();
    } catch (const Error&) {
        return z;
    }
    for (const auto& q : coords) {
        if (q == 0) continue;
        if (q < 0) return -z;
        break;
    }
    return z;
}

}  // namespace

std::vector<Mat> substituted_minors(const PresentationMatrix& M, unsigned a,
                                    const PhiPool& pool, Subst mode, const MinorCaps& caps) {
    M.validate();
    if (a > M.dp) throw InputError("a exceeds the column count of " + M.label);
    check_caps(M, a, caps);
    const FiniteGroup& G = *M.G;
    unsigned d = M.d, dp = M.dp;
    unsigned subst_positions = (mode == Subst::Column) ? dp : d;
    unsigned vec_len = (mode == Subst::Column) ? d : dp;
    auto phis = pool.vectors(G, vec_len);
    auto row_choices = subsets(d, dp);

    std::vector<Mat> out;
    for (unsigned t = 0; t <= a; ++t) {
        if (t > 0 && phis.empty()) break;  // nothing to substitute with
        auto Js = subsets(subst_positions, t);
        // phi tuples: t independent choices from the pool
        std::vector<unsigned> pick(t, 0);
        for (const auto& J : Js) {
            bool done = false;
            std::fill(pick.begin(), pick.end(), 0);
            while (!done) {
                Mat sub = M.entries;
                for (unsigned s = 0; s < t; ++s) {
                    const auto& phi = phis[pick[s]];
                    if (mode == Subst::Column)
                        for (unsigned i = 0; i < d; ++i) sub[i][J[s]] = phi[i];
                    else
                        for (unsigned j = 0; j < dp; ++j) sub[J[s]][j] = phi[j];
                }
                for (const auto& R : row_choices) {
                    out.push_back(take_rows(sub, R));
                    if (out.size() > caps.max_matrices && !caps.override_caps)
                        throw CapExceeded("substituted-minor enumeration exceeds " +
                                          std::to_string(caps.max_matrices) + " matrices");
                }
                // advance the tuple
                done = true;
                for (unsigned s = 0; s < t; ++s) {
                    if (++pick[s] < phis.size()) {
                        done = false;
                        break;
                    }
                    pick[s] = 0;
                }
                if (t == 0) break;
            }
        }
    }
    return out;
}

IdealGens fit_a(const RepSet& reps, const PresentationMatrix& M, unsigned a,
                const PhiPool& pool, Subst mode, const MinorCaps& caps) {
    M.validate();
    if (a > M.dp) throw InputError("a exceeds the column count of " + M.label);
    const CharacterTable& tab = *reps.table;
    IdealGens out;
    out.tab = &tab;
    out.phi_pool = pool.descriptor();
    std::ostringstream meta;
    meta << "mode=" << (mode == Subst::Column ? "column" : "row") << ",a=" << a;
    out.xi_bound = meta.str();

    if (pool.is_default()) {
        // Block-cofactor reduction: substituting a single +-g kills all rows
        // but one of the blown-up column block, so each generator is a unit
        // (the reduced norm of a group element) times the reduced norm of a
        // complementary submatrix.  Units are reduced norms of singletons,
        // which every xi generator list contains, so the spanned module is
        // unchanged.
        check_caps(M, a, caps);
        for (unsigned t = 0; t <= a && t <= M.dp; ++t) {
            unsigned s = M.dp - t;
            for (const auto& R : subsets(M.d, s))
                for (const auto& C : subsets(M.dp, s))
                    out.gens.push_back(normalize_sign(nrd(reps, take_sub(M.entries, R, C))));
        }
        out.dedup();
        return out;
    }

    auto minors = substituted_minors(M, a, pool, mode, caps);
    for (const auto& m : minors) out.gens.push_back(normalize_sign(nrd(reps, m)));
    out.dedup();
    return out;
}

PresentationMatrix transpose_presentation(const PresentationMatrix& M) {
    M.validate();
    PresentationMatrix T;
    T.G = M.G;
    T.d = M.dp;
    T.dp = M.d;
    T.label = M.label + ".tr";
    T.entries.assign(M.dp, std::vector<GroupRingElem>(M.d, GroupRingElem::zero(*M.G)));
    for (unsigned i = 0; i < M.d; ++i)
        for (unsigned j = 0; j < M.dp; ++j) T.entries[j][i] = iota_sharp(M.entries[i][j]);
    return T;
}

namespace {

// class coordinates of every product xi_k * gen_m
std::vector<std::vector<Rat>> span_coords(const IdealGens& gens, const IdealGens& xi,
                                          const char* side) {
    std::vector<std::vector<Rat>> out;
    for (const auto& g : gens.gens) {
        if (!g.is_galois_stable())
            throw GaloisInstability(std::string(side) +
                                    " generator not in zeta(Q[G]): " + g.str());
        for (const auto& x : xi.gens) out.push_back((x * g).class_coords());
    }
    return out;
}

IntMat integerize(const std::vector<std::vector<Rat>>& coords, const Int& scale) {
    IntMat cols;
    for (const auto& vec : coords) {
        std::vector<Int> col;
        for (const auto& q : vec) {
            Rat scaled = q * Rat(scale);
            if (scaled.get_den() != 1)
                throw ArithmeticError("denominator clearing failed in ideal comparison");
            col.push_back(scaled.get_num());
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

CompareResult ideal_compare(const IdealGens& I1, const IdealGens& I2, const IdealGens& xi) {
    if (I1.tab != I2.tab || I1.tab != xi.tab)
        throw InputError("ideal comparison across different tables");

    unsigned n = I1.tab->group().num_classes();
    auto c1 = span_coords(I1, xi, "left");
    auto c2 = span_coords(I2, xi, "right");
    Int scale(1);
    for (const auto* cs : {&c1, &c2})
        for (const auto& vec : *cs)
            for (const auto& q : vec) {
                Int den = q.get_den(), gc;
                mpz_gcd(gc.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
                scale = scale / gc * den;
            }
    IntMat L1 = integerize(c1, scale);
    IntMat L2 = integerize(c2, scale);
    bool l_in_r = lattice_subset(L1, L2, n);
    bool r_in_l = lattice_subset(L2, L1, n);
    CompareResult res;
    std::ostringstream cert;
    cert << "lattice dims: left " << hnf(L1, n).size() << ", right " << hnf(L2, n).size()
         << "; xi=" << (xi.xi_bound.empty() ? "(unlabelled)" : xi.xi_bound);
    res.certificate = cert.str();
    if (l_in_r && r_in_l) res.order = IdealOrder::Equal;
    else if (l_in_r) res.order = IdealOrder::LeftInRight;
    else if (r_in_l) res.order = IdealOrder::RightInLeft;
    else res.order = IdealOrder::Incomparable;
    return res;
}

TransposeReport verify_transpose_relation(const RepSet& reps, const PresentationMatrix& M,
                                          unsigned a, const PhiPool& pool, const IdealGens& xi,
                                          const MinorCaps& caps) {
    M.validate();
    if (M.d != M.dp) throw InputError("transpose relation requires a square matrix");
    TransposeReport rep;
    auto Mtr = transpose_presentation(M);

    // per-submatrix identity Nrd(iota(Q)^tr) = iota_#(Nrd(Q)) on the default
    // pool reduction, exact for every square submatrix
    rep.generator_match = true;
    if (pool.is_default()) {
        for (unsigned t = 0; t <= a && t <= M.dp; ++t) {
            unsigned s = M.dp - t;
            for (const auto& R : subsets(M.d, s))
                for (const auto& C : subsets(M.dp, s)) {
                    auto Q = take_sub(M.entries, R, C);
                    PresentationMatrix QM{M.G, s, s, Q, "sub"};
                    auto Qtr = transpose_presentation(QM);
                    if (!(nrd(reps, Qtr.entries) == nrd(reps, Q).dual()))
                        rep.generator_match = false;
                }
        }
    }

    auto left = fit_a(reps, Mtr, a, pool, Subst::Row, caps);
    auto right = fit_a(reps, M, a, pool, Subst::Column, caps);
    for (auto& g : right.gens) g = g.dual();
    right.dedup();
    rep.compare = ideal_compare(left, right, xi);
    rep.bounds = pool.descriptor() + ";" + xi.xi_bound;
    rep.pass = rep.generator_match && rep.compare.order == IdealOrder::Equal;
    return rep;
}

DecompositionReport verify_decomposition(const RepSet& reps, const PresentationMatrix& M,
                                         unsigned a, const SConfig& cfg, const std::string& v,
                                         const PhiPool& pool, const IdealGens& xi,
                                         const MinorCaps& caps) {
    M.validate();
    if (M.d != M.dp) throw InputError("decomposition check requires a square matrix");
    cfg.place(v);
    const CharacterTable& tab = *reps.table;
    const FiniteGroup& G = tab.group();
    DecompositionReport rep;
    rep.c_value = c_asv(tab, a, cfg, v);
    rep.exact = G.is_abelian();

    auto fit = fit_a(reps, M, a, pool, Subst::Column, caps);
    auto idem = stark_idempotents(tab, a, cfg);
    auto w = wp_sets(tab, a, cfg, v);
    auto e1 = CenterElem::from_group_ring(tab, e_psi(tab.at(0)));
    auto ev = CenterElem::from_group_ring(tab, e_place(tab, v, cfg));
    auto e_a = CenterElem::from_group_ring(tab, idem.e_a_S);
    auto e_ge_a = CenterElem::from_group_ring(tab, idem.e_at_least_a_S);
    std::vector<CenterElem> eIs;
    for (const auto& I : w.avoiding)
        eIs.push_back(CenterElem::from_group_ring(tab, e_I(tab, I, a, cfg)));

    // (i) idempotent-identity reduction, generator by generator:
    //     (1 - e_v) e_{a,S} x = sum_I (e_I - e_1) x
    rep.reduction_ok = true;
    auto lhs_idem = (CenterElem::one(tab) - ev) * e_a;
    for (const auto& x : fit.gens) {
        auto lhs = lhs_idem * x;
        auto rhs = CenterElem::zero(tab);
        for (const auto& eI : eIs) rhs = rhs + (eI - e1) * x;
        if (!(lhs == rhs)) rep.reduction_ok = false;
    }

    // (iii) directness: pairwise orthogonality of e_I - e_1 over wp*_a(S)
    rep.directness_ok = true;
    std::vector<CenterElem> all_eIs;
    for (const auto& I : w.star)
        all_eIs.push_back(CenterElem::from_group_ring(tab, e_I(tab, I, a, cfg)));
    for (unsigned i = 0; i < all_eIs.size(); ++i)
        for (unsigned j = 0; j < i; ++j)
            if (!((all_eIs[i] - e1) * (all_eIs[j] - e1)).is_zero())
                rep.directness_ok = false;

    // (ii) lattice equality of the two sides of the decomposition
    IdealGens left;
    left.tab = &tab;
    auto lhs_full = (CenterElem::one(tab) - ev + e1) * e_ge_a;
    for (const auto& x : fit.gens) left.gens.push_back(lhs_full * x);
    left.dedup();
    IdealGens right;
    right.tab = &tab;
    if (rep.c_value != 0)
        for (const auto& x : fit.gens) right.gens.push_back(e1 * x * Cyclo((long)rep.c_value));
    for (const auto& eI : eIs)
        for (const auto& x : fit.gens) right.gens.push_back(eI * x);
    right.dedup();
    auto cmp = ideal_compare(left, right, xi);
    rep.lattice_ok = cmp.order == IdealOrder::Equal;

    std::ostringstream detail;
    detail << "c=" << rep.c_value << "; wp_a(S,v) size " << w.avoiding.size() << "; "
           << cmp.certificate;
    rep.detail = detail.str();
    rep.bounds = pool.descriptor() + ";" + xi.xi_bound;
    rep.pass = rep.reduction_ok && rep.directness_ok && (rep.lattice_ok || !rep.exact);
    return rep;
}

std::vector<GroupRingElem> classical_fitting_gens(const PresentationMatrix& M, unsigned a) {
    M.validate();
    if (!M.G->is_abelian())
        throw InputError("classical Fitting oracle requires an abelian group");
    if (a > M.dp) throw InputError("a exceeds the column count");
    const FiniteGroup& G = *M.G;

    // commutative determinant by cofactor expansion
    std::function<GroupRingElem(const Mat&)> det = [&](const Mat& m) -> GroupRingElem {
        unsigned k = (unsigned)m.size();
        if (k == 0) return GroupRingElem::one(G);
        if (k == 1) return m[0][0];
        auto acc = GroupRingElem::zero(G);
        for (unsigned j = 0; j < k; ++j) {
            Mat minor;
            for (unsigned i = 1; i < k; ++i) {
                std::vector<GroupRingElem> row;
                for (unsigned jj = 0; jj < k; ++jj)
                    if (jj != j) row.push_back(m[i][jj]);
                minor.push_back(row);
            }
            auto term = m[0][j] * det(minor);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };

    std::vector<GroupRingElem> gens;
    for (unsigned t = 0; t <= a && t <= M.dp; ++t) {
        unsigned s = M.dp - t;
        for (const auto& R : subsets(M.d, s))
            for (const auto& C : subsets(M.dp, s)) gens.push_back(det(take_sub(M.entries, R, C)));
    }
    return gens;
}

}  // namespace gring
