#include "gring/character.hpp"

#include <algorithm>
#include <cstdint>

#include "gring/errors.hpp"

namespace gring {

bool Character::is_trivial() const {
    for (const auto& v : values)
        if (!(v == Cyclo::one())) return false;
    return true;
}

Cyclo Character::sum_over(const Subgroup& H) const {
    Cyclo s;
    for (unsigned h : H.elems) s += values[h];
    return s;
}

Cyclo inner_product(const Character& a, const Character& b) {
    if (a.group != b.group) throw InputError("characters of different groups");
    Cyclo s;
    const FiniteGroup& G = *a.group;
    for (unsigned g = 0; g < G.order(); ++g) s += a.values[g] * b.values[g].conj();
    return s * Cyclo(make_rat(Int(1), Int(G.order())));
}

namespace {

// Dense matrix over F_p (p < 2^31), row major.
struct ModMatrix {
    unsigned n = 0;
    uint64_t p = 0;
    std::vector<uint64_t> a;
    uint64_t& at(unsigned i, unsigned j) { return a[i * (size_t)n + j]; }
    uint64_t at(unsigned i, unsigned j) const { return a[i * (size_t)n + j]; }
};

using ModVec = std::vector<uint64_t>;

ModVec mat_vec(const ModMatrix& M, const ModVec& v) {
    ModVec r(M.n, 0);
    for (unsigned i = 0; i < M.n; ++i) {
        __uint128_t acc = 0;
        for (unsigned j = 0; j < M.n; ++j) acc += (__uint128_t)M.at(i, j) * v[j];
        r[i] = (uint64_t)(acc % M.p);
    }
    return r;
}

// Characteristic polynomial of a k x k matrix over F_p via Hessenberg
// reduction; returns coefficients, constant term first, leading coeff 1.
std::vector<uint64_t> char_poly(std::vector<std::vector<uint64_t>> h, uint64_t p) {
    unsigned k = (unsigned)h.size();
    for (unsigned col = 0; col + 2 < k; ++col) {
        // find pivot in rows col+1..k-1
        unsigned piv = col + 1;
        while (piv < k && h[piv][col] == 0) ++piv;
        if (piv == k) continue;
        if (piv != col + 1) {
            std::swap(h[piv], h[col + 1]);
            for (unsigned i = 0; i < k; ++i) std::swap(h[i][piv], h[i][col + 1]);
        }
        uint64_t inv = mod_inv(h[col + 1][col], p);
        for (unsigned row = col + 2; row < k; ++row) {
            if (h[row][col] == 0) continue;
            uint64_t f = (__uint128_t)h[row][col] * inv % p;
            // row -= f * row(col+1)
            for (unsigned j = 0; j < k; ++j) {
                uint64_t sub = (__uint128_t)f * h[col + 1][j] % p;
                h[row][j] = (h[row][j] + p - sub) % p;
            }
            // col(col+1) += f * col(row)
            for (unsigned i = 0; i < k; ++i) {
                uint64_t add = (__uint128_t)f * h[i][row] % p;
                h[i][col + 1] = (h[i][col + 1] + add) % p;
            }
        }
    }
    // recurrence: p_0 = 1; p_m = (x - h[m-1][m-1]) p_{m-1}
    //             - sum_{i=1}^{m-1} h[m-1-i][m-1] (prod beta) p_{m-1-i}
    std::vector<std::vector<uint64_t>> polys(k + 1);
    polys[0] = {1};
    for (unsigned m = 1; m <= k; ++m) {
        std::vector<uint64_t> pm(m + 1, 0);
        const auto& pm1 = polys[m - 1];
        for (unsigned j = 0; j < pm1.size(); ++j) {
            pm[j + 1] = (pm[j + 1] + pm1[j]) % p;  // x * p_{m-1}
            uint64_t sub = (__uint128_t)h[m - 1][m - 1] * pm1[j] % p;
            pm[j] = (pm[j] + p - sub) % p;
        }
        uint64_t beta = 1;
        for (unsigned i = 1; i < m; ++i) {
            beta = (__uint128_t)beta * h[m - i][m - i - 1] % p;
            if (beta == 0) break;
            uint64_t coef = (__uint128_t)h[m - 1 - i][m - 1] * beta % p;
            if (coef == 0) continue;
            const auto& pmi = polys[m - 1 - i];
            for (unsigned j = 0; j < pmi.size(); ++j) {
                uint64_t sub = (__uint128_t)coef * pmi[j] % p;
                pm[j] = (pm[j] + p - sub) % p;
            }
        }
        polys[m] = std::move(pm);
    }
    return polys[k];
}

uint64_t poly_eval(const std::vector<uint64_t>& poly, uint64_t x, uint64_t p) {
    uint64_t r = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = ((__uint128_t)r * x + *it) % p;
    return r;
}

// Column-style nullspace basis of (A - lambda I) for a k x k matrix.
std::vector<ModVec> eigen_space(std::vector<std::vector<uint64_t>> a, uint64_t lambda,
                                uint64_t p) {
    unsigned k = (unsigned)a.size();
    for (unsigned i = 0; i < k; ++i) a[i][i] = (a[i][i] + p - lambda % p) % p;
    // reduced row echelon
    std::vector<int> pivot_of_col(k, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < k && row < k; ++col) {
        unsigned sel = row;
        while (sel < k && a[sel][col] == 0) ++sel;
        if (sel == k) continue;
        std::swap(a[sel], a[row]);
        uint64_t inv = mod_inv(a[row][col], p);
        for (unsigned j = 0; j < k; ++j) a[row][j] = (__uint128_t)a[row][j] * inv % p;
        for (unsigned i = 0; i < k; ++i) {
            if (i == row || a[i][col] == 0) continue;
            uint64_t f = a[i][col];
            for (unsigned j = 0; j < k; ++j) {
                uint64_t sub = (__uint128_t)f * a[row][j] % p;
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        pivot_of_col[col] = (int)row;
        ++row;
    }
    std::vector<ModVec> basis;
    for (unsigned col = 0; col < k; ++col) {
        if (pivot_of_col[col] != -1) continue;
        ModVec v(k, 0);
        v[col] = 1;
        for (unsigned c2 = 0; c2 < k; ++c2)
            if (pivot_of_col[c2] != -1) v[c2] = (p - a[pivot_of_col[c2]][col] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

CharacterTable::CharacterTable(const FiniteGroup& G) : G_(&G), level_(G.exponent()) { build(); }

void CharacterTable::build() {
    const FiniteGroup& G = *G_;
    unsigned n = G.order();
    unsigned r = G.num_classes();
    unsigned e = level_;

    // Dixon prime: p = 1 (mod e), p > |G| (also covers p > 2 sqrt|G| for the
    // degree square root and p > r for linear algebra).
    uint64_t p = prime_one_mod(e, std::max<unsigned long>(n, 4));

    // class multiplication coefficients a_{ijk}
    std::vector<ModMatrix> class_mats(r);
    std::vector<unsigned> csize(r);
    for (unsigned c = 0; c < r; ++c) csize[c] = (unsigned)G.class_members(c).size();
    for (unsigned i = 0; i < r; ++i) {
        ModMatrix M;
        M.n = r;
        M.p = p;
        M.a.assign((size_t)r * r, 0);
        for (unsigned j = 0; j < r; ++j) {
            std::vector<uint64_t> cnt(r, 0);
            for (unsigned x : G.class_members(i))
                for (unsigned y : G.class_members(j)) ++cnt[G.class_of(G.op(x, y))];
            for (unsigned k = 0; k < r; ++k) M.at(j, k) = (cnt[k] / csize[k]) % p;
        }
        class_mats[i] = std::move(M);
    }

    // split the common eigenspaces of all class matrices until 1-dimensional
    std::vector<std::vector<ModVec>> spaces;
    {
        std::vector<ModVec> full;
        for (unsigned i = 0; i < r; ++i) {
            ModVec v(r, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (unsigned mi = 0; mi < r; ++mi) {
        bool all_split = true;
        for (const auto& sp : spaces)
            if (sp.size() > 1) all_split = false;
        if (all_split) break;
        std::vector<std::vector<ModVec>> next;
        for (auto& sp : spaces) {
            unsigned k = (unsigned)sp.size();
            if (k == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            // action matrix A of class_mats[mi] on span(sp): M * b_j = sum A_ij b_i.
            // Solve with Gaussian elimination on the basis matrix.
            std::vector<ModVec> images(k);
            for (unsigned j = 0; j < k; ++j) images[j] = mat_vec(class_mats[mi], sp[j]);
            // coordinates of each image in the basis: solve B x = img
            std::vector<std::vector<uint64_t>> B(r, std::vector<uint64_t>(k + k, 0));
            // augmented [B | images]
            std::vector<std::vector<uint64_t>> aug(r, std::vector<uint64_t>(k + k, 0));
            for (unsigned i = 0; i < r; ++i)
                for (unsigned j = 0; j < k; ++j) {
                    aug[i][j] = sp[j][i];
                    aug[i][k + j] = images[j][i];
                }
            // eliminate
            std::vector<int> pivot_row_of(k, -1);
            unsigned row = 0;
            for (unsigned col = 0; col < k && row < r; ++col) {
                unsigned sel = row;
                while (sel < r && aug[sel][col] == 0) ++sel;
                if (sel == r) throw ArithmeticError("basis not independent in Dixon split");
                std::swap(aug[sel], aug[row]);
                uint64_t inv = mod_inv(aug[row][col], p);
                for (unsigned j2 = 0; j2 < k + k; ++j2)
                    aug[row][j2] = (__uint128_t)aug[row][j2] * inv % p;
                for (unsigned i2 = 0; i2 < r; ++i2) {
                    if (i2 == row || aug[i2][col] == 0) continue;
                    uint64_t f = aug[i2][col];
                    for (unsigned j2 = 0; j2 < k + k; ++j2) {
                        uint64_t sub = (__uint128_t)f * aug[row][j2] % p;
                        aug[i2][j2] = (aug[i2][j2] + p - sub) % p;
                    }
                }
                pivot_row_of[col] = (int)row;
                ++row;
            }
            std::vector<std::vector<uint64_t>> A(k, std::vector<uint64_t>(k, 0));
            for (unsigned col = 0; col < k; ++col)
                for (unsigned j = 0; j < k; ++j) A[col][j] = aug[pivot_row_of[col]][k + j];

            auto cp = char_poly(A, p);
            std::vector<uint64_t> roots;
            for (uint64_t lam = 0; lam < p; ++lam)
                if (poly_eval(cp, lam, p) == 0) roots.push_back(lam);
            if (roots.size() <= 1) {
                next.push_back(std::move(sp));  // M acts as a scalar here
                continue;
            }
            for (uint64_t lam : roots) {
                auto sub_basis = eigen_space(A, lam, p);
                if (sub_basis.empty()) continue;
                std::vector<ModVec> newsp;
                for (const auto& coords : sub_basis) {
                    ModVec v(r, 0);
                    for (unsigned j = 0; j < k; ++j)
                        for (unsigned i = 0; i < r; ++i)
                            v[i] = (v[i] + (__uint128_t)coords[j] * sp[j][i]) % p;
                    newsp.push_back(std::move(v));
                }
                next.push_back(std::move(newsp));
            }
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) throw ArithmeticError("Dixon splitting did not reach " +
                                                  std::to_string(r) + " eigenspaces");

    // normalize central characters: omega(identity class) = 1
    unsigned id_class = G.class_of(0);
    std::vector<ModVec> omegas;
    for (auto& sp : spaces) {
        ModVec v = sp[0];
        if (v[id_class] == 0) throw ArithmeticError("central character vanishes at identity");
        uint64_t inv = mod_inv(v[id_class], p);
        for (auto& x : v) x = (__uint128_t)x * inv % p;
        omegas.push_back(std::move(v));
    }

    // inverse class map
    std::vector<unsigned> jstar(r);
    for (unsigned c = 0; c < r; ++c) jstar[c] = G.class_of(G.inv(G.class_rep(c)));

    // degrees: d^2 = |G| / sum_j omega(j) omega(j*) / |C_j|
    std::vector<unsigned> degrees(r);
    std::vector<ModVec> chi_mod(r, ModVec(r, 0));
    unsigned sqrt_n = 1;
    while ((sqrt_n + 1) * (sqrt_n + 1) <= n) ++sqrt_n;
    for (unsigned t = 0; t < r; ++t) {
        uint64_t s = 0;
        for (unsigned j = 0; j < r; ++j) {
            uint64_t term = (__uint128_t)omegas[t][j] * omegas[t][jstar[j]] % p;
            s = (s + (__uint128_t)term * mod_inv(csize[j], p)) % p;
        }
        uint64_t d2 = (__uint128_t)(n % p) * mod_inv(s, p) % p;
        unsigned deg = 0;
        for (unsigned d = 1; d <= sqrt_n; ++d)
            if ((__uint128_t)d * d % p == d2) {
                deg = d;
                break;
            }
        if (deg == 0) throw ArithmeticError("no valid degree for a character");
        degrees[t] = deg;
        for (unsigned j = 0; j < r; ++j)
            chi_mod[t][j] =
                (__uint128_t)deg * omegas[t][j] % p * mod_inv(csize[j], p) % p;
    }

    // lift to Q(zeta_e) by counting eigenvalue multiplicities
    uint64_t z = mod_pow(primitive_root(p), (p - 1) / e, p);
    std::vector<Character> chars;
    for (unsigned t = 0; t < r; ++t) {
        std::vector<Cyclo> class_vals(r);
        for (unsigned c = 0; c < r; ++c) {
            unsigned g = G.class_rep(c);
            unsigned m = G.element_order(g);
            uint64_t zm = mod_pow(z, e / m, p);  // primitive m-th root mod p
            uint64_t minv = mod_inv(m, p);
            Cyclo val;
            uint64_t check = 0;
            for (unsigned k = 0; k < m; ++k) {
                // multiplicity of zeta_m^k among the eigenvalues of rho(g)
                uint64_t mk = 0;
                unsigned x = g;  // g^1
                uint64_t zpow_base = mod_inv(mod_pow(zm, k, p), p);
                uint64_t zp = 1;
                // t runs over powers of g; g^0 contributes chi(1)
                mk = (mk + chi_mod[t][id_class]) % p;
                for (unsigned tt = 1; tt < m; ++tt) {
                    zp = (__uint128_t)zp * zpow_base % p;
                    mk = (mk + (__uint128_t)chi_mod[t][G.class_of(x)] * zp) % p;
                    x = G.op(x, g);
                }
                mk = (__uint128_t)mk * minv % p;
                if (mk > degrees[t])
                    throw ArithmeticError("eigenvalue multiplicity lift out of range");
                check += mk;
                if (mk != 0)
                    val += Cyclo(make_rat(Int((unsigned long)mk), Int(1))) *
                           Cyclo::root_of_unity(e, (long)k * (long)(e / m));
            }
            if (check != degrees[t])
                throw ArithmeticError("eigenvalue multiplicities do not sum to the degree");
            class_vals[c] = val.at_level(e);
        }
        Character chi;
        chi.group = G_;
        chi.degree = degrees[t];
        chi.values.resize(n);
        for (unsigned g = 0; g < n; ++g) chi.values[g] = class_vals[G.class_of(g)];
        chars.push_back(std::move(chi));
    }

    // deterministic ordering: trivial, then degree, then lex on coefficients
    auto value_key = [](const Character& c) {
        std::string key;
        for (const auto& v : c.values) {
            key += v.str();
            key += '|';
        }
        return key;
    };
    std::stable_sort(chars.begin(), chars.end(), [&](const Character& a, const Character& b) {
        bool ta = a.is_trivial(), tb = b.is_trivial();
        if (ta != tb) return ta;
        if (a.degree != b.degree) return a.degree < b.degree;
        return value_key(a) < value_key(b);
    });
    chars_ = std::move(chars);

    contra_.resize(r);
    for (unsigned i = 0; i < r; ++i) {
        std::vector<Cyclo> inv_vals(n);
        for (unsigned g = 0; g < n; ++g) inv_vals[g] = chars_[i].values[G.inv(g)];
        contra_[i] = index_of(inv_vals);
    }
}

unsigned CharacterTable::index_of(const std::vector<Cyclo>& values) const {
    for (unsigned i = 0; i < chars_.size(); ++i) {
        bool same = true;
        for (unsigned g = 0; g < values.size() && same; ++g)
            if (!(chars_[i].values[g] == values[g])) same = false;
        if (same) return i;
    }
    throw ArithmeticError("character values not found in table");
}

unsigned CharacterTable::galois_twist(unsigned i, long k) const {
    std::vector<Cyclo> tw(chars_[i].values.size());
    for (unsigned g = 0; g < tw.size(); ++g) tw[g] = chars_[i].values[g].galois(k);
    return index_of(tw);
}

Cyclo CharacterTable::inner_product(unsigned i, unsigned j) const {
    return gring::inner_product(chars_[i], chars_[j]);
}

}  // namespace gring
