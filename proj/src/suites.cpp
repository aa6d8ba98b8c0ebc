#include "gring/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "gring/catalog.hpp"
#include "gring/cyclotomic.hpp"
#include "gring/errors.hpp"
#include "gring/io.hpp"
#include "gring/lseries.hpp"
#include "gring/version.hpp"

namespace gring {

unsigned SuiteReport::failures() const {
    unsigned n = 0;
    for (const auto& r : records)
        if (r.verdict == "fail") ++n;
    return n;
}

unsigned SuiteReport::bounded() const {
    unsigned n = 0;
    for (const auto& r : records)
        if (r.verdict == "bounded-pass") ++n;
    return n;
}

std::vector<SConfig> standard_configs(const FiniteGroup& G) {
    auto mk = [&](std::string label, std::vector<unsigned> gens, bool arch = false) {
        PlaceDatum p;
        p.label = std::move(label);
        p.decomp = subgroup_closure(G, gens);
        p.archimedean = arch;
        return p;
    };
    std::vector<unsigned> all;
    for (unsigned g = 1; g < G.order(); ++g) all.push_back(g);

    std::vector<SConfig> configs;
    // wide: split + full + a cyclic middle place
    SConfig wide;
    wide.G = &G;
    wide.S.push_back(mk("v1", {}, true));
    wide.S.push_back(mk("v2", all));
    if (G.order() > 1) wide.S.push_back(mk("v3", {1}));
    if (G.order() == 1) wide.v0 = "v1";
    configs.push_back(std::move(wide));

    // narrow: split + full
    SConfig narrow;
    narrow.G = &G;
    narrow.S.push_back(mk("v1", {}, true));
    narrow.S.push_back(mk("v2", all));
    if (G.order() == 1) narrow.v0 = "v1";
    configs.push_back(std::move(narrow));

    // middles: split + two distinct proper nontrivial subgroups, when they
    // exist (gives nonempty wp_a(S, v) strata in the abelian fixtures)
    std::vector<Subgroup> proper;
    for (const auto& H : all_subgroups(G))
        if (H.order() > 1 && H.order() < G.order()) proper.push_back(H);
    if (proper.size() >= 2) {
        SConfig mid;
        mid.G = &G;
        mid.S.push_back(mk("v1", {}, true));
        mid.S.push_back(mk("v2", proper.front().elems));
        mid.S.push_back(mk("v3", proper.back().elems));
        configs.push_back(std::move(mid));
    }
    for (auto& c : configs) c.validate();
    return configs;
}

PresentationMatrix decomposition_matrix(const SConfig& cfg, uint64_t seed) {
    const FiniteGroup& G = *cfg.G;
    unsigned n = cfg.s_size();
    std::mt19937_64 rng(seed);
    PresentationMatrix M;
    M.G = &G;
    M.d = M.dp = n;
    M.label = G.name() + ".decomp";
    M.entries.assign(n, std::vector<GroupRingElem>(n, GroupRingElem::zero(G)));
    for (unsigned k = 0; k < n; ++k) {
        auto Nv = normal_closure(G, cfg.S[k].decomp);
        if (Nv.order() == 1) continue;  // split place: zero column
        unsigned h1 = Nv.elems[1];
        unsigned h2 = Nv.elems.back();
        // diagonal: 1 - h1
        M.entries[k][k] = GroupRingElem::one(G) - GroupRingElem::unit(G, h1);
        // one off-diagonal entry: (1 - h2) g, still inside I(N_v) Z[G]
        unsigned row = (k + 1) % n;
        unsigned g = (unsigned)(rng() % G.order());
        auto shift = GroupRingElem::unit(G, g);
        M.entries[row][k] =
            M.entries[row][k] + (GroupRingElem::one(G) - GroupRingElem::unit(G, h2)) * shift;
    }
    M.validate();
    return M;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    std::vector<std::function<CheckRecord()>> tasks;

    void add(std::function<CheckRecord()> f) { tasks.push_back(std::move(f)); }

    std::vector<CheckRecord> run(unsigned jobs, bool timings) {
        std::vector<CheckRecord> records(tasks.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                auto t0 = Clock::now();
                CheckRecord rec;
                try {
                    rec = tasks[i]();
                } catch (const Error& e) {
                    rec.id = "task" + std::to_string(i);
                    rec.verdict = "fail";
                    rec.certificate = e.what();
                }
                if (timings)
                    rec.elapsed_ms =
                        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
                records[i] = std::move(rec);
            }
        };
        unsigned n = std::max(1u, jobs);
        if (n == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        std::stable_sort(records.begin(), records.end(),
                         [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
        return records;
    }
};

CheckRecord make_record(std::string id, std::string params, bool pass,
                        std::string certificate = "", bool bounded = false) {
    CheckRecord rec;
    rec.id = std::move(id);
    rec.params = std::move(params);
    rec.verdict = pass ? (bounded ? "bounded-pass" : "pass") : "fail";
    rec.certificate = std::move(certificate);
    return rec;
}

// ---- algebra suite -------------------------------------------------------

void add_algebra_checks(Checker& ck, const SuiteOptions& opt) {
    for (const auto& name : catalog::names()) {
        ck.add([name]() {
            const auto& G = catalog::by_name(name);
            CharacterTable T(G);
            bool ok = true;
            unsigned degsq = 0;
            for (unsigned i = 0; i < T.size(); ++i) {
                degsq += T.at(i).degree * T.at(i).degree;
                for (unsigned j = 0; j < T.size(); ++j)
                    if (!(T.inner_product(i, j) == (i == j ? Cyclo::one() : Cyclo::zero())))
                        ok = false;
            }
            if (degsq != G.order()) ok = false;
            return make_record("algebra.character-table." + name, "orthogonality+degrees", ok);
        });
        ck.add([name, &opt]() {
            const auto& G = catalog::by_name(name);
            CharacterTable T(G);
            RepSet reps = RepSet::build(T);
            std::mt19937_64 rng(opt.seed);
            bool ok = true;
            auto rnd_mat = [&](unsigned d) {
                std::vector<std::vector<GroupRingElem>> m(
                    d, std::vector<GroupRingElem>(d, GroupRingElem::zero(G)));
                for (auto& row : m)
                    for (auto& e : row)
                        for (int s = 0; s < 2; ++s)
                            e.c[rng() % G.order()] += Cyclo((long)(rng() % 5) - 2);
                return m;
            };
            for (unsigned rep = 0; rep < 100 && ok; ++rep) {
                unsigned d = 1 + rep % 3;
                auto A = rnd_mat(d), B = rnd_mat(d);
                std::vector<std::vector<GroupRingElem>> AB(
                    d, std::vector<GroupRingElem>(d, GroupRingElem::zero(G)));
                for (unsigned i = 0; i < d; ++i)
                    for (unsigned j = 0; j < d; ++j)
                        for (unsigned k = 0; k < d; ++k)
                            AB[i][j] = AB[i][j] + A[i][k] * B[k][j];
                if (!(nrd(reps, AB) == nrd(reps, A) * nrd(reps, B))) ok = false;
            }
            return make_record("algebra.nrd-multiplicativity." + name, "pairs=100", ok);
        });
        ck.add([name, &opt]() {
            const auto& G = catalog::by_name(name);
            CharacterTable T(G);
            std::mt19937_64 rng(opt.seed + 1);
            bool ok = true;
            auto rnd = [&]() {
                auto x = GroupRingElem::zero(G);
                for (auto& q : x.c) q = Cyclo((long)(rng() % 7) - 3);
                return x;
            };
            for (int rep = 0; rep < 25 && ok; ++rep) {
                auto x = rnd(), y = rnd();
                if (!(iota_sharp(iota_sharp(x)) == x)) ok = false;
                if (!(iota_sharp(x * y) == iota_sharp(y) * iota_sharp(x))) ok = false;
            }
            for (unsigned i = 0; i < T.size() && ok; ++i)
                if (!(iota_sharp(e_psi(T.at(i))) == e_psi(T.at(T.contragredient(i))))) ok = false;
            return make_record("algebra.iota-sharp." + name, "involution+anti-mult", ok);
        });
    }
}

// ---- combinatorics suite -------------------------------------------------

void add_combinatorics_checks(Checker& ck, const SuiteOptions&) {
    for (const auto& name : catalog::names()) {
        auto configs_count = standard_configs(catalog::by_name(name)).size();
        for (unsigned c = 0; c < configs_count; ++c) {
            ck.add([name, c]() {
                const auto& G = catalog::by_name(name);
                CharacterTable T(G);
                auto cfg = standard_configs(G)[c];
                bool ok = true;
                std::ostringstream cert;
                for (unsigned a = 0; a <= cfg.s_size() && ok; ++a)
                    for (const auto& p : cfg.S) {
                        auto rep = verify_idem_identity(T, a, cfg, p.label);
                        if (!rep.pass) {
                            ok = false;
                            cert << "a=" << a << " v=" << p.label << " lhs=" << rep.lhs.str()
                                 << " rhs=" << rep.rhs.str();
                            break;
                        }
                    }
                return make_record(
                    "combinatorics.idem-identity." + name + ".cfg" + std::to_string(c),
                    "sweep a in [0,|S|], all v", ok, cert.str());
            });
        }
    }
    // c^a_{S,v} regression: the four case values from the degenerate analysis
    ck.add([]() {
        bool ok = true;
        std::ostringstream cert;
        {  // a = 0 gives 0 everywhere
            const auto& G = catalog::s3();
            CharacterTable T(G);
            auto cfg = standard_configs(G)[0];
            for (const auto& p : cfg.S)
                if (c_asv(T, 0, cfg, p.label) != 0) ok = false;
        }
        {  // |S^a_min| = |S|-1 = a: -1 inside S^a_min, 0 outside
            const auto& V4 = catalog::c2c2();
            CharacterTable T(V4);
            SConfig cfg;
            cfg.G = &V4;
            auto mk = [&](std::string l, std::vector<unsigned> g) {
                PlaceDatum p;
                p.label = std::move(l);
                p.decomp = subgroup_closure(V4, g);
                return p;
            };
            cfg.S = {mk("v1", {}), mk("v2", {}), mk("w", {1, 2})};
            if (c_asv(T, 2, cfg, "v1") != -1) {
                ok = false;
                cert << "expected -1 at split place;";
            }
            if (c_asv(T, 2, cfg, "w") != 0) {
                ok = false;
                cert << "expected 0 off S^a_min;";
            }
        }
        {  // S^a_min empty, 0 < a = |S|-1: +1
            const auto& C2 = catalog::c2();
            CharacterTable T(C2);
            SConfig cfg;
            cfg.G = &C2;
            auto mk = [&](std::string l) {
                PlaceDatum p;
                p.label = std::move(l);
                p.decomp = C2.full_subgroup();
                return p;
            };
            cfg.S = {mk("p"), mk("q")};
            if (c_asv(T, 1, cfg, "p") != 1) {
                ok = false;
                cert << "expected +1 in the empty-S_min case;";
            }
            if (c_asv(T, 3, cfg, "p") != 0) {
                ok = false;
                cert << "expected 0 for a >= |S|;";
            }
        }
        return make_record("combinatorics.c-regression", "degenerate case values", ok, cert.str());
    });
}

// ---- fitting suite -------------------------------------------------------

void add_fitting_checks(Checker& ck, const SuiteOptions& opt) {
    // abelian classical-Fitting oracle: >= 50 random matrices overall.  With
    // a pool below the default support the generators form a declared
    // sub-ideal only, and the check downgrades to a bounded containment.
    bool degraded_pool = opt.pool_support < 1;
    for (const auto& name :
         {std::string("C2"), std::string("C4"), std::string("C6"), std::string("C2xC2")}) {
        ck.add([name, &opt, degraded_pool]() {
            const auto& G = catalog::by_name(name);
            CharacterTable T(G);
            RepSet reps = RepSet::build(T);
            auto xi = whitehead_generators(reps, 1, 1);
            PhiPool pool;
            pool.max_support = opt.pool_support;
            std::mt19937_64 rng(opt.seed + G.order());
            bool ok = true;
            std::ostringstream cert;
            for (unsigned rep = 0; rep < 13 && ok; ++rep) {
                unsigned dp = 1 + rng() % 3;
                unsigned d = dp + rng() % (4 - dp);
                PresentationMatrix M;
                M.G = &G;
                M.d = d;
                M.dp = dp;
                M.label = "rnd" + std::to_string(rep);
                M.entries.assign(d, std::vector<GroupRingElem>(dp, GroupRingElem::zero(G)));
                for (auto& row : M.entries)
                    for (auto& e : row)
                        for (int s = 0; s < 2; ++s)
                            e.c[rng() % G.order()] += Cyclo((long)(rng() % 5) - 2);
                for (unsigned a = 0; a <= std::min(dp, 1u) && ok; ++a) {
                    auto fit = fit_a(reps, M, a, pool, Subst::Column);
                    IdealGens oracle;
                    oracle.tab = &T;
                    for (const auto& g : classical_fitting_gens(M, a))
                        oracle.gens.push_back(CenterElem::from_group_ring(T, g));
                    oracle.dedup();
                    auto cmp = ideal_compare(fit, oracle, xi);
                    bool good = degraded_pool ? (cmp.order == IdealOrder::Equal ||
                                                 cmp.order == IdealOrder::LeftInRight)
                                              : cmp.order == IdealOrder::Equal;
                    if (!good) {
                        ok = false;
                        cert << "matrix " << rep << " a=" << a << ": " << cmp.certificate;
                    }
                }
            }
            if (degraded_pool) cert << "pool below default support: containment only";
            return make_record("fitting.abelian-oracle." + name, "matrices=13, a in {0,1}", ok,
                               cert.str(), degraded_pool);
        });
    }
    // transpose relation
    for (const auto& name : {std::string("C2"), std::string("C4"), std::string("C6"),
                             std::string("C2xC2"), std::string("S3"), std::string("Q8")}) {
        ck.add([name, &opt, degraded_pool]() {
            const auto& G = catalog::by_name(name);
            CharacterTable T(G);
            RepSet reps = RepSet::build(T);
            bool abelian = G.is_abelian();
            auto xi = abelian ? whitehead_generators(reps, 1, 1)
                              : whitehead_generators(reps, opt.xi_dmax, opt.xi_coeff, opt.seed);
            PhiPool pool;
            pool.max_support = opt.pool_support;
            std::mt19937_64 rng(opt.seed + 7 * G.order());
            bool ok = true;
            std::ostringstream cert;
            for (unsigned rep = 0; rep < 4 && ok; ++rep) {
                unsigned d = 2 + rep % 2;
                PresentationMatrix M;
                M.G = &G;
                M.d = M.dp = d;
                M.label = "sq" + std::to_string(rep);
                M.entries.assign(d, std::vector<GroupRingElem>(d, GroupRingElem::zero(G)));
                for (auto& row : M.entries)
                    for (auto& e : row)
                        for (int s = 0; s < 2; ++s)
                            e.c[rng() % G.order()] += Cyclo((long)(rng() % 5) - 2);
                for (unsigned a = 0; a <= 1 && ok; ++a) {
                    auto r = verify_transpose_relation(reps, M, a, pool, xi);
                    if (!r.generator_match || r.compare.order != IdealOrder::Equal) {
                        ok = false;
                        cert << "matrix " << rep << " a=" << a << ": " << r.compare.certificate;
                    }
                }
            }
            return make_record("fitting.transpose." + name,
                               abelian ? "exact" : "bounded: " + xi.xi_bound, ok, cert.str(),
                               !abelian || degraded_pool);
        });
    }
    // decomposition across the corpus
    for (const auto& name : catalog::names()) {
        auto configs_count = standard_configs(catalog::by_name(name)).size();
        for (unsigned c = 0; c < configs_count; ++c) {
            ck.add([name, c, &opt, degraded_pool]() {
                const auto& G = catalog::by_name(name);
                CharacterTable T(G);
                RepSet reps = RepSet::build(T);
                bool abelian = G.is_abelian();
                auto xi = abelian
                              ? whitehead_generators(reps, 1, 1)
                              : whitehead_generators(reps, opt.xi_dmax, opt.xi_coeff, opt.seed);
                PhiPool pool;
                pool.max_support = opt.pool_support;
                auto cfg = standard_configs(G)[c];
                auto M = decomposition_matrix(cfg, opt.seed + c);
                MinorCaps caps;
                caps.override_caps = true;  // the sweep needs a up to |S|
                bool ok = true;
                bool lattice_all = true;
                std::ostringstream cert;
                for (unsigned a = 0; a <= cfg.s_size() && ok; ++a)
                    for (const auto& p : cfg.S) {
                        auto rep =
                            verify_decomposition(reps, M, a, cfg, p.label, pool, xi, caps);
                        lattice_all = lattice_all && rep.lattice_ok;
                        bool good = degraded_pool
                                        ? rep.reduction_ok && rep.directness_ok
                                        : rep.pass;
                        if (!good) {
                            ok = false;
                            cert << "a=" << a << " v=" << p.label << ": " << rep.detail;
                            break;
                        }
                    }
                if (ok && (!abelian || degraded_pool))
                    cert << (lattice_all ? "bounded lattice equality also held"
                                         : "bounded lattice equality not established");
                return make_record(
                    "fitting.decomposition." + name + ".cfg" + std::to_string(c),
                    abelian && !degraded_pool ? "exact ideal equality"
                                              : "reduction+directness: " + xi.xi_bound,
                    ok, cert.str(), !abelian || degraded_pool);
            });
        }
    }
}

// ---- lvalues suite -------------------------------------------------------

void add_lvalues_checks(Checker& ck, const SuiteOptions& opt) {
    struct Fx {
        unsigned m;
        std::vector<unsigned long> ts;
    };
    static const std::vector<Fx> fields = {{3, {5, 7}}, {4, {3, 5}},  {5, {3, 7}},
                                           {7, {3, 5}}, {8, {3, 5}},  {12, {5, 7}}};
    for (const auto& fx : fields) {
        for (unsigned long t : fx.ts) {
            ck.add([m = fx.m, t]() {
                auto setup = cyclotomic_setup(m, {}, {t});
                auto rep = stickelberger_integrality(setup.reps, setup.cfg, setup.lsource);
                std::ostringstream cert;
                cert << "gamma_T theta = " << rep.element.str();
                bool ok = rep.integral;
                if (m == 4 && t == 3) {
                    // the hand value 1 - g
                    auto expect = GroupRingElem::one(*setup.group) -
                                  GroupRingElem::unit(*setup.group, 1);
                    ok = ok && rep.element == expect;
                }
                return make_record("lvalues.stickelberger.m" + std::to_string(m) + ".T" +
                                       std::to_string(t),
                                   "integrality of gamma_T theta<0>", ok, cert.str());
            });
        }
        ck.add([m = fx.m, &opt]() {
            auto setup = cyclotomic_setup(m);
            bool ok = true;
            std::ostringstream cert;
            for (unsigned i = 0; i < setup.table->size() && ok; ++i) {
                unsigned counted = ord_vanishing(setup.table->at(i), setup.cfg);
                unsigned detected = detect_order(setup.lsource.dchars[i],
                                                 setup.lsource.s_primes, counted + 1);
                if (counted != detected) {
                    ok = false;
                    cert << "chi" << i << ": counted " << counted << " detected " << detected;
                }
                if (counted == 0) {
                    auto exact = l_value_at_zero(setup.lsource.dchars[i], setup.lsource.s_primes);
                    auto lt = leading_term_numeric(setup.lsource.dchars[i],
                                                   setup.lsource.s_primes, 0, opt.precision);
                    if (std::abs(lt.value - exact.to_complex()) > 1e-8) {
                        ok = false;
                        cert << "chi" << i << ": numeric/exact gap";
                    }
                }
            }
            return make_record("lvalues.ord-crosscheck.m" + std::to_string(m),
                               "count formula vs numeric order; r=0 at 1e-8", ok, cert.str());
        });
    }

    // L-invariant rationality at the shipped quadratic fixture
    ck.add([&opt]() {
        const auto& C2 = catalog::c2();
        CharacterTable T(C2);
        RepSet reps = RepSet::build(T);
        std::string base = opt.fixtures_dir;
        std::ostringstream cert;
        bool ok = true;
        try {
            auto reg = io::regulator_from_json(io::read_file(base + "/regulator/sqrt5.json"));
            auto cfg = io::places_from_json(io::read_file(base + "/places/sqrt5.json"), C2);
            auto homs_json = io::read_file(base + "/regulator/sqrt5_homs.json");
            LSource src;
            src.has_dirichlet = true;
            src.s_primes = {5};
            auto chars5 = dirichlet_characters(5);
            for (const auto& chi : chars5)
                if (chi.is_principal()) src.dchars.push_back(chi);
            for (const auto& chi : chars5)
                if (!chi.is_principal() && chi(4) == Cyclo::one()) src.dchars.push_back(chi);

            auto gamma = gamma_T(reps, cfg);
            for (const auto& hj : homs_json.at("homs")) {
                auto psi = io::hom_from_json(hj);
                std::vector<Rat> first_pass;
                for (unsigned digits : {opt.precision, 2 * opt.precision}) {
                    LSource src2 = src;
                    src2.precision_digits = digits;
                    auto L = l_invariant(reps, 1, psi, reg, cfg, src2);
                    auto scaled = L * gamma;
                    std::vector<Rat> recon;
                    for (unsigned i = 0; i < scaled.comp.size(); ++i) {
                        auto z = scaled.comp[i].embed();
                        if (std::abs(z.imag()) > 1e-8) {
                            ok = false;
                            cert << "nonreal component;";
                        }
                        auto q = rational_reconstruct(z.real(), 10000);
                        if (!q) {
                            ok = false;
                            cert << "chi" << i << " not rational within 1e4;";
                            break;
                        }
                        recon.push_back(*q);
                    }
                    if (first_pass.empty())
                        first_pass = recon;
                    else if (first_pass != recon) {
                        ok = false;
                        cert << "reconstruction unstable under precision doubling;";
                    }
                }
            }
            // duality pairing cross-validation on the shipped tuples
            for (const auto& pj : homs_json.at("phi_tuples")) {
                std::vector<std::vector<std::vector<long>>> tuple;
                for (const auto& fj : pj)
                    tuple.push_back(fj.get<std::vector<std::vector<long>>>());
                auto check = theta_I_crosscheck(reps, {"inf"}, 1, cfg, tuple, reg, src, 1e-8);
                if (!check.pass) {
                    ok = false;
                    cert << "pairing deviation " << check.max_deviation << ";";
                }
            }
        } catch (const Error& e) {
            ok = false;
            cert << e.what();
        }
        return make_record("lvalues.linv-rationality.sqrt5",
                           "reconstruct bound 1e4, precision doubling, duality pairing", ok,
                           cert.str());
    });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    Checker ck;
    bool known = false;
    if (name == "algebra" || name == "all") {
        add_algebra_checks(ck, opt);
        known = true;
    }
    if (name == "combinatorics" || name == "all") {
        add_combinatorics_checks(ck, opt);
        known = true;
    }
    if (name == "fitting" || name == "all") {
        add_fitting_checks(ck, opt);
        known = true;
    }
    if (name == "lvalues" || name == "all") {
        add_lvalues_checks(ck, opt);
        known = true;
    }
    if (!known) throw InputError("unknown suite '" + name + "'");
    SuiteReport rep;
    rep.suite = name;
    rep.version = kVersion;
    std::ostringstream bounds;
    bounds << "seed=" << opt.seed << ",xi_dmax=" << opt.xi_dmax << ",xi_coeff=" << opt.xi_coeff
           << ",pool_support=" << opt.pool_support << ",precision=" << opt.precision;
    rep.bounds = bounds.str();
    rep.records = ck.run(opt.jobs, opt.timings);
    return rep;
}

}  // namespace gring
