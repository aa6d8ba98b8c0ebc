#include "gring/regulator.hpp"

#include <algorithm>
#include <cmath>

#include "gring/errors.hpp"
#include "gring/lattice.hpp"

namespace gring {

namespace {

using CMat = std::vector<std::vector<std::complex<double>>>;

CMat cmat(unsigned r, unsigned c) {
    return CMat(r, std::vector<std::complex<double>>(c, {0.0, 0.0}));
}

CMat cmul(const CMat& a, const CMat& b) {
    unsigned n = (unsigned)a.size(), m = (unsigned)b[0].size(), k = (unsigned)b.size();
    CMat r = cmat(n, m);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned t = 0; t < k; ++t) {
            if (a[i][t] == std::complex<double>(0.0, 0.0)) continue;
            for (unsigned j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

// Gaussian elimination inverse; throws on (numerically) singular input.
CMat cinv(CMat a) {
    unsigned n = (unsigned)a.size();
    CMat inv = cmat(n, n);
    for (unsigned i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        for (unsigned i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        if (std::abs(a[piv][col]) < 1e-12)
            throw ArithmeticError("singular matrix in regulator computation");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        auto d = a[col][col];
        for (unsigned j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == col) continue;
            auto f = a[i][col];
            if (f == std::complex<double>(0.0, 0.0)) continue;
            for (unsigned j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::complex<double> cdet(CMat a) {
    unsigned n = (unsigned)a.size();
    std::complex<double> det = 1.0;
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        for (unsigned i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        if (std::abs(a[piv][col]) < 1e-14) return {0.0, 0.0};
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (unsigned i = col + 1; i < n; ++i) {
            auto f = a[i][col] / a[col][col];
            for (unsigned j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

// X_{L,S} has basis {w_i - w_last}; the action matrix in that basis.
CMat x_action(const RegulatorData& reg, unsigned g) {
    unsigned P = reg.places();
    CMat m = cmat(P - 1, P - 1);
    const auto& perm = reg.place_action[g];
    for (unsigned i = 0; i + 1 < P; ++i) {
        unsigned gi = perm[i], glast = perm[P - 1];
        // g(w_i - w_last) = w_{gi} - w_{glast}
        if (gi + 1 < P) m[gi][i] += 1.0;
        if (glast + 1 < P) m[glast][i] -= 1.0;
    }
    return m;
}

// Dirichlet regulator matrix A: column j = coordinates of R(u_j) in the X
// basis, A[i][j] = -log|u_j|_{w_i}.
CMat reg_matrix(const RegulatorData& reg) {
    unsigned P = reg.places(), U = reg.units();
    CMat A = cmat(P - 1, U);
    for (unsigned j = 0; j < U; ++j)
        for (unsigned i = 0; i + 1 < P; ++i) A[i][j] = -reg.logs[j][i];
    return A;
}

// integer multiplicity of chi in the X = ker(Y -> Z) representation
unsigned x_multiplicity(const CharacterTable& tab, unsigned chi_index,
                        const RegulatorData& reg) {
    const FiniteGroup& G = tab.group();
    const Character& chi = tab.at(chi_index);
    Cyclo acc;
    for (unsigned g = 0; g < G.order(); ++g) {
        unsigned fixed = 0;
        for (unsigned w = 0; w < reg.places(); ++w)
            if (reg.place_action[g][w] == w) ++fixed;
        Cyclo xchar = Cyclo((long)fixed) - Cyclo::one();
        acc += xchar * chi.values[g].conj();
    }
    acc *= Cyclo(make_rat(Int(1), Int(G.order())));
    Rat q = acc.rational();
    if (q.get_den() != 1 || q < 0)
        throw ArithmeticError("character multiplicity in X is not a nonnegative integer");
    return (unsigned)q.get_num().get_ui();
}

// Orthonormal basis of the multiplicity space of chi inside X_C: the column
// space of the matrix-unit projector built from the representation.
CMat multiplicity_basis(const RepSet& reps, unsigned chi_index, const RegulatorData& reg,
                        unsigned expected_dim) {
    const CharacterTable& tab = *reps.table;
    const FiniteGroup& G = tab.group();
    unsigned n = reg.places() - 1;
    const MatrixRep& rho = reps.reps[chi_index];
    CMat T = cmat(n, n);
    double scale = (double)rho.dim / (double)G.order();
    for (unsigned g = 0; g < G.order(); ++g) {
        std::complex<double> coeff = std::conj(rho.at(g, 0, 0).to_complex()) * scale;
        if (std::abs(coeff) < 1e-15) continue;
        auto act = x_action(reg, g);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) T[i][j] += coeff * act[i][j];
    }
    // modified Gram-Schmidt on the columns
    CMat Q;
    for (unsigned j = 0; j < n; ++j) {
        std::vector<std::complex<double>> v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = T[i][j];
        for (const auto& q : Q) {
            std::complex<double> dot = 0.0;
            for (unsigned i = 0; i < n; ++i) dot += std::conj(q[i]) * v[i];
            for (unsigned i = 0; i < n; ++i) v[i] -= dot * q[i];
        }
        double norm = 0.0;
        for (const auto& x : v) norm += std::norm(x);
        norm = std::sqrt(norm);
        if (norm < 1e-9) continue;
        for (auto& x : v) x /= norm;
        Q.push_back(std::move(v));
    }
    if (Q.size() != expected_dim)
        throw ArithmeticError("multiplicity space dimension mismatch (got " +
                              std::to_string(Q.size()) + ", expected " +
                              std::to_string(expected_dim) + ")");
    return Q;  // rows of Q are the basis vectors
}

// Per-character determinant of an equivariant endomorphism of X (given in
// the w_i - w_last basis).
CenterValue nrd_of_endo(const RepSet& reps, const CMat& P, const RegulatorData& reg,
                        double err_scale) {
    const CharacterTable& tab = *reps.table;
    CenterValue out = CenterValue::zero(tab);
    for (unsigned t = 0; t < tab.size(); ++t) {
        unsigned m = x_multiplicity(tab, t, reg);
        if (m == 0) {
            out.comp[t].exact = true;
            out.comp[t].val = Cyclo::one();  // empty block
            continue;
        }
        auto Q = multiplicity_basis(reps, t, reg, m);
        CMat C = cmat(m, m);
        unsigned n = (unsigned)P.size();
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < m; ++c) {
                std::complex<double> acc = 0.0;
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j)
                        acc += std::conj(Q[r][i]) * P[i][j] * Q[c][j];
                C[r][c] = acc;
            }
        out.comp[t].exact = false;
        out.comp[t].num = cdet(C);
        out.comp[t].err = err_scale * (1.0 + std::abs(out.comp[t].num));
    }
    return out;
}

}  // namespace

void RegulatorData::validate(const FiniteGroup& G) const {
    unsigned U = units(), P = places();
    if (logs.size() != U) throw InputError("logs row count does not match unit count");
    for (const auto& row : logs)
        if (row.size() != P) throw InputError("logs column count does not match place count");
    if (unit_action.size() != G.order() || place_action.size() != G.order())
        throw InputError("action data must cover every group element");
    double tol = std::pow(10.0, -(double)precision_digits) * 100.0;
    for (const auto& row : logs) {
        double s = 0.0;
        for (double x : row) s += x;
        if (std::abs(s) > tol)
            throw InputError("product-formula row sum violated beyond the declared precision");
    }
    for (unsigned g = 0; g < G.order(); ++g) {
        const auto& pa = place_action[g];
        if (pa.size() != P) throw InputError("place action has wrong degree");
        std::vector<bool> seen(P, false);
        for (unsigned w : pa) {
            if (w >= P || seen[w]) throw InputError("place action is not a permutation");
            seen[w] = true;
        }
        const auto& ua = unit_action[g];
        if (ua.size() != U) throw InputError("unit action has wrong dimension");
        for (const auto& row : ua)
            if (row.size() != U) throw InputError("unit action has wrong dimension");
        // log equivariance: log|g(u_j)|_{g(w)} = log|u_j|_w
        for (unsigned j = 0; j < U; ++j)
            for (unsigned w = 0; w < P; ++w) {
                double lhs = 0.0;  // log|g(u_j)|_{g(w)} via the unit action
                for (unsigned i = 0; i < U; ++i) lhs += (double)ua[i][j] * logs[i][pa[w]];
                if (std::abs(lhs - logs[j][w]) > tol)
                    throw InputError("log data is not G-equivariant at element " +
                                     std::to_string(g));
            }
    }
    for (const auto& [label, idxs] : above) {
        if (idxs.empty()) throw InputError("place '" + label + "' has no places above it");
        for (unsigned w : idxs)
            if (w >= P) throw InputError("orbit index out of range for '" + label + "'");
    }
}

void HomMatrix::validate(const RegulatorData& reg, const FiniteGroup& G) {
    unsigned n = reg.places() - 1, U = reg.units();
    if (m.size() != n) throw InputError("hom matrix has wrong row count");
    for (const auto& row : m)
        if (row.size() != U) throw InputError("hom matrix has wrong column count");
    // equivariance over Z: psi(g u_j) = g psi(u_j); compare in Y coordinates
    for (unsigned g = 0; g < G.order(); ++g) {
        const auto& ua = reg.unit_action[g];
        const auto& pa = reg.place_action[g];
        for (unsigned j = 0; j < U; ++j) {
            // left: psi(g u_j) = sum_i ua[i][j] psi(u_i)  (X coords)
            std::vector<long> left(n, 0);
            for (unsigned i = 0; i < U; ++i)
                for (unsigned r = 0; r < n; ++r) left[r] += ua[i][j] * m[r][i];
            // right: g psi(u_j): push X coords through the place permutation
            std::vector<long> y(reg.places(), 0);
            long last = 0;
            for (unsigned r = 0; r < n; ++r) {
                y[pa[r]] += m[r][j];
                last -= m[r][j];
            }
            y[pa[n]] += last;
            // back to X coords: w_i coefficient for i < n (w_last drops out)
            for (unsigned r = 0; r < n; ++r)
                if (left[r] != y[r])
                    throw InputError("hom matrix is not G-equivariant");
        }
    }
}

CenterValue regulator_R(const RepSet& reps, const HomMatrix& psi, const RegulatorData& reg) {
    const FiniteGroup& G = reps.table->group();
    reg.validate(G);
    HomMatrix copy = psi;
    copy.validate(reg, G);
    unsigned n = reg.places() - 1, U = reg.units();
    if (U != n)
        throw InputError("regulator requires a full-rank unit lattice (units = places-1)");
    CMat A = reg_matrix(reg);
    CMat B = cmat(n, U);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < U; ++j) B[i][j] = (double)psi.m[i][j];
    CMat P = cmul(B, cinv(A));
    double err_scale = std::pow(10.0, -(double)reg.precision_digits) * 100.0;
    return nrd_of_endo(reps, P, reg, err_scale);
}

CenterValue l_invariant(const RepSet& reps, unsigned a, const HomMatrix& phi,
                        const RegulatorData& reg, const SConfig& cfg, const LSource& src) {
    auto theta = theta_a(*reps.table, a, cfg, src);
    auto R = regulator_R(reps, phi, reg);
    return theta.bracket * R;
}

bool in_hom_I(const HomMatrix& psi, const std::set<std::string>& I, const RegulatorData& reg,
              const FiniteGroup& G) {
    unsigned n = reg.places() - 1, U = reg.units();
    unsigned a = (unsigned)I.size();
    // Y_I indices and the designated places w_v
    std::vector<unsigned> yI;
    std::vector<unsigned> wv;
    for (const auto& label : I) {
        auto it = reg.above.find(label);
        if (it == reg.above.end())
            throw InputError("no orbit data for place '" + label + "'");
        wv.push_back(it->second.front());
        for (unsigned w : it->second) yI.push_back(w);
    }
    std::sort(yI.begin(), yI.end());
    std::vector<int> y_pos(reg.places(), -1);
    for (unsigned k = 0; k < yI.size(); ++k) y_pos[yI[k]] = (int)k;

    // target: nu_{S,I}(psi(u_j)) in Y_I coordinates
    std::vector<std::vector<Int>> target(yI.size(), std::vector<Int>(U, Int(0)));
    for (unsigned j = 0; j < U; ++j) {
        std::vector<long> y(reg.places(), 0);
        long last = 0;
        for (unsigned r = 0; r < n; ++r) {
            y[r] += psi.m[r][j];
            last -= psi.m[r][j];
        }
        y[n] += last;
        for (unsigned k = 0; k < yI.size(); ++k) target[k][j] = y[yI[k]];
    }

    // unknowns: Lambda[(v,g)][j] for v < a, g in G, j < U
    unsigned ng = G.order();
    unsigned nvars = a * ng * U;
    auto var = [&](unsigned v, unsigned g, unsigned j) { return (v * ng + g) * U + j; };
    std::vector<std::vector<Int>> rows;  // equations as rows over the unknowns

    // composition: sum_{v,g} Lambda[(v,g)][j] [g w_v = t] = target[t][j]
    std::vector<Int> rhs;
    for (unsigned k = 0; k < yI.size(); ++k)
        for (unsigned j = 0; j < U; ++j) {
            std::vector<Int> row(nvars, Int(0));
            for (unsigned v = 0; v < a; ++v)
                for (unsigned g = 0; g < ng; ++g)
                    if (reg.place_action[g][wv[v]] == yI[k]) row[var(v, g, j)] += 1;
            rows.push_back(std::move(row));
            rhs.push_back(target[k][j]);
        }
    // equivariance: Lambda[(v, h^{-1}g)][j] = sum_k Lambda[(v,g)][k] ua_h[k][j]
    for (unsigned h = 1; h < ng; ++h) {
        const auto& ua = reg.unit_action[h];
        for (unsigned v = 0; v < a; ++v)
            for (unsigned g = 0; g < ng; ++g)
                for (unsigned j = 0; j < U; ++j) {
                    std::vector<Int> row(nvars, Int(0));
                    row[var(v, G.op(G.inv(h), g), j)] += 1;
                    for (unsigned k = 0; k < U; ++k)
                        if (ua[k][j] != 0) row[var(v, g, k)] -= ua[k][j];
                    rows.push_back(std::move(row));
                    rhs.push_back(Int(0));
                }
    }
    // solve_integer takes columns; transpose
    unsigned neq = (unsigned)rows.size();
    IntMat cols(nvars, std::vector<Int>(neq, Int(0)));
    for (unsigned r = 0; r < neq; ++r)
        for (unsigned c = 0; c < nvars; ++c) cols[c][r] = rows[r][c];
    return solve_integer(cols, neq, rhs).has_value();
}

ThetaIGens theta_I_gens(const RepSet& reps, const std::set<std::string>& I, unsigned a,
                        const SConfig& cfg, const std::vector<HomMatrix>& hom_list,
                        const RegulatorData& reg, const LSource& src) {
    const CharacterTable& tab = *reps.table;
    if (I.size() != a) throw InputError("I must have cardinality a");
    auto w = wp_sets(tab, a, cfg, cfg.S.front().label);
    if (std::find(w.star.begin(), w.star.end(), I) == w.star.end())
        throw InputError("I is not an element of wp*_a(S)");

    auto theta = theta_a(tab, a, cfg, src);
    auto gamma = gamma_T(reps, cfg);
    auto theta_ST = theta.round * gamma;
    auto eI = CenterElem::from_group_ring(tab, e_I(tab, I, a, cfg));

    ThetaIGens out;
    const FiniteGroup& G = tab.group();
    for (const auto& psi : hom_list) {
        bool member = in_hom_I(psi, I, reg, G);
        HomMatrix used = psi;
        if (!member) {
            for (auto& row : used.m)
                for (auto& x : row) x *= (long)G.order();
            if (!in_hom_I(used, I, reg, G))
                throw ArithmeticError(
                    "|G|-scaled hom still fails the Hom^I lifting criterion");
        }
        out.scaled_by_group_order.push_back(!member);
        out.gens.push_back(theta_ST * regulator_R(reps, used, reg) * eI);
    }
    out.bounds = "homs=" + std::to_string(hom_list.size());
    return out;
}

PairingCheck theta_I_crosscheck(const RepSet& reps, const std::set<std::string>& I, unsigned a,
                                const SConfig& cfg,
                                const std::vector<std::vector<std::vector<long>>>& phi_tuple,
                                const RegulatorData& reg, const LSource& src, double tol) {
    const CharacterTable& tab = *reps.table;
    const FiniteGroup& G = tab.group();
    reg.validate(G);
    if (phi_tuple.size() != a || I.size() != a)
        throw InputError("pairing check requires one phi per element of I");
    unsigned n = reg.places() - 1, U = reg.units();
    if (U != n) throw InputError("pairing check requires a full-rank unit lattice");

    // designated places: w_v for v in I, and w_I above the first place of
    // S \ I
    std::vector<unsigned> wv;
    for (const auto& label : I) wv.push_back(reg.above.at(label).front());
    unsigned wI = reg.places();
    for (const auto& p : cfg.S)
        if (!I.count(p.label)) {
            wI = reg.above.at(p.label).front();
            break;
        }
    if (wI == reg.places()) throw InputError("S \\ I is empty; no anchor place available");

    CMat A = reg_matrix(reg);
    CMat Ainv = cinv(A);

    // M(phi)_{v,v'} = (phi_v o R^{-1})(w_{v'} - w_I), an a x a matrix over
    // R[G]; store group-ring coefficient vectors
    std::vector<std::vector<std::vector<std::complex<double>>>> M(
        a, std::vector<std::vector<std::complex<double>>>(
               a, std::vector<std::complex<double>>(G.order(), {0.0, 0.0})));
    for (unsigned vp = 0; vp < a; ++vp) {
        // X coordinates of w_{v'} - w_I
        std::vector<std::complex<double>> y(n, {0.0, 0.0});
        if (wv[vp] < n) y[wv[vp]] += 1.0;
        if (wI < n) y[wI] -= 1.0;
        // unit coordinates
        std::vector<std::complex<double>> c(n, {0.0, 0.0});
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) c[i] += Ainv[i][j] * y[j];
        for (unsigned v = 0; v < a; ++v)
            for (unsigned g = 0; g < G.order(); ++g) {
                std::complex<double> acc = 0.0;
                for (unsigned j = 0; j < U; ++j)
                    acc += (double)phi_tuple[v][g][j] * c[j];
                M[v][vp][g] = acc;
            }
    }

    // Nrd of the numeric group-ring matrix per character
    auto theta = theta_a(tab, a, cfg, src);
    auto gamma = gamma_T(reps, cfg);
    auto theta_ST = theta.round * gamma;
    auto eI = CenterElem::from_group_ring(tab, e_I(tab, I, a, cfg));

    CenterValue nrd_pairing = CenterValue::zero(tab);
    for (unsigned t = 0; t < tab.size(); ++t) {
        const MatrixRep& rho = reps.reps[t];
        unsigned dim = rho.dim;
        CMat blow = cmat(a * dim, a * dim);
        for (unsigned i = 0; i < a; ++i)
            for (unsigned j = 0; j < a; ++j)
                for (unsigned g = 0; g < G.order(); ++g) {
                    if (M[i][j][g] == std::complex<double>(0.0, 0.0)) continue;
                    for (unsigned r = 0; r < dim; ++r)
                        for (unsigned c2 = 0; c2 < dim; ++c2) {
                            auto rv = rho.at(g, r, c2);
                            if (!rv.is_zero())
                                blow[i * dim + r][j * dim + c2] += M[i][j][g] * rv.to_complex();
                        }
                }
        nrd_pairing.comp[t].exact = false;
        nrd_pairing.comp[t].num = cdet(blow);
        nrd_pairing.comp[t].err = std::pow(10.0, -(double)reg.precision_digits) * 100.0;
    }

    // regulator side: psi_phi = sum_v (1 -> w_v - w_I) o phi_v
    HomMatrix psi;
    psi.m.assign(n, std::vector<long>(U, 0));
    for (unsigned v = 0; v < a; ++v)
        for (unsigned j = 0; j < U; ++j)
            for (unsigned g = 0; g < G.order(); ++g) {
                long coeff = phi_tuple[v][g][j];
                if (coeff == 0) continue;
                unsigned gw = reg.place_action[g][wv[v]];
                unsigned gwI = reg.place_action[g][wI];
                if (gw < n) psi.m[gw][j] += coeff;
                if (gwI < n) psi.m[gwI][j] -= coeff;
            }

    PairingCheck out;
    out.pairing_side = nrd_pairing * theta_ST * eI;
    out.regulator_side = regulator_R(reps, psi, reg) * theta_ST * eI;
    out.max_deviation = 0.0;
    for (unsigned t = 0; t < tab.size(); ++t) {
        double d = std::abs(out.pairing_side.comp[t].embed() -
                            out.regulator_side.comp[t].embed());
        out.max_deviation = std::max(out.max_deviation, d);
    }
    out.pass = out.max_deviation < tol;
    return out;
}

}  // namespace gring
