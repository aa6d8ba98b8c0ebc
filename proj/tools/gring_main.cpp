// Command-line front end: exact group-ring combinatorics, Fitting-invariant
// generators, Stickelberger elements and L-invariant checks over fixture
// files.  Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "gring/catalog.hpp"
#include "gring/cyclotomic.hpp"
#include "gring/errors.hpp"
#include "gring/io.hpp"
#include "gring/lseries.hpp"
#include "gring/suites.hpp"
#include "gring/version.hpp"

using namespace gring;
using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json_out = false;
    uint64_t seed = 2024;
    unsigned jobs = 1;
    unsigned precision = 10;
    unsigned pool_bound = 1;   // PhiPool max_support
    unsigned xi_dmax = 2;      // whitehead size bound
    long xi_coeff = 2;         // whitehead coefficient bound
    std::string fixtures = "fixtures";
};

json record_json(const std::string& check, const std::string& params,
                 const std::string& verdict, const std::string& bounds,
                 const json& certificate = nullptr) {
    json j;
    j["check"] = check;
    j["parameters"] = params;
    j["verdict"] = verdict;
    j["bounds"] = bounds;
    if (!certificate.is_null()) j["certificate"] = certificate;
    return j;
}

void print_value(const CenterValue& v, const std::string& name, bool as_json, json& out) {
    if (v.all_exact()) {
        auto elem = v.exact().to_group_ring();
        if (as_json)
            out[name] = io::group_ring_to_json(elem);
        else
            std::cout << name << " = " << elem.str() << "\n";
        return;
    }
    json comps = json::array();
    for (unsigned i = 0; i < v.comp.size(); ++i) {
        const auto& c = v.comp[i];
        json cj;
        cj["chi"] = i;
        if (c.exact) {
            cj["exact"] = io::cyclo_to_json(c.val);
        } else {
            cj["value"] = {c.num.real(), c.num.imag()};
            cj["err"] = c.err;
        }
        comps.push_back(cj);
    }
    if (as_json) {
        out[name] = comps;
    } else {
        std::cout << name << " (per character):\n";
        for (const auto& c : comps) std::cout << "  " << c.dump() << "\n";
    }
}

int cmd_idem(const GlobalOpts& g, const std::string& group_file,
             const std::string& places_file, unsigned a, const std::string& v_opt) {
    FiniteGroup G = io::group_from_json(io::read_file(group_file));
    SConfig cfg = io::places_from_json(io::read_file(places_file), G);
    CharacterTable tab(G);

    auto idem = stark_idempotents(tab, a, cfg);
    auto smin = s_min(tab, a, cfg);
    auto w = wp_sets(tab, a, cfg, cfg.S.front().label);

    json out;
    out["e_aS"] = io::group_ring_to_json(idem.e_a_S);
    out["e_(a)S"] = io::group_ring_to_json(idem.e_at_least_a_S);
    out["S_min"] = smin;
    json star = json::array();
    for (const auto& I : w.star) star.push_back(I);
    out["wp_star"] = star;

    bool all_pass = true;
    json checks = json::array();
    for (const auto& p : cfg.S) {
        if (!v_opt.empty() && p.label != v_opt) continue;
        auto rep = verify_idem_identity(tab, a, cfg, p.label);
        all_pass = all_pass && rep.pass;
        json cj;
        cj["v"] = p.label;
        cj["c_aSv"] = c_asv(tab, a, cfg, p.label);
        cj["identity"] = rep.pass ? "pass" : "fail";
        if (!rep.pass) {
            cj["lhs"] = io::group_ring_to_json(rep.lhs);
            cj["rhs"] = io::group_ring_to_json(rep.rhs);
        }
        checks.push_back(cj);
    }
    out["checks"] = checks;
    json report = record_json("idem", "a=" + std::to_string(a) + ",group=" + G.name(),
                              all_pass ? "pass" : "fail", "exact", out);
    if (g.json_out)
        std::cout << report.dump(2) << "\n";
    else {
        std::cout << "e_{a,S}   = " << idem.e_a_S.str() << "\n";
        std::cout << "e_{(a),S} = " << idem.e_at_least_a_S.str() << "\n";
        std::cout << "S^a_min   = {";
        bool first = true;
        for (const auto& s : smin) {
            std::cout << (first ? "" : ", ") << s;
            first = false;
        }
        std::cout << "}\n";
        for (const auto& c : out["checks"])
            std::cout << "v=" << c["v"].get<std::string>() << "  c^a_{S,v}=" << c["c_aSv"]
                      << "  identity: " << c["identity"].get<std::string>() << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_fit(const GlobalOpts& g, const std::string& group_file, const std::string& matrix_file,
            unsigned a, const std::string& mode_str, bool oracle,
            const std::string& compare_file, bool override_caps) {
    FiniteGroup G = io::group_from_json(io::read_file(group_file));
    PresentationMatrix M = io::matrix_from_json(io::read_file(matrix_file), G);
    if (a > M.dp) throw InputError("--a exceeds the column count of the matrix");
    CharacterTable tab(G);
    RepSet reps = RepSet::build(tab);
    Subst mode = mode_str == "row" ? Subst::Row : Subst::Column;
    PhiPool pool;
    pool.max_support = g.pool_bound;
    pool.seed = g.seed;
    MinorCaps caps;
    caps.override_caps = override_caps;

    auto xi = G.is_abelian() ? whitehead_generators(reps, 1, 1)
                             : whitehead_generators(reps, g.xi_dmax, g.xi_coeff, g.seed);
    auto fit = fit_a(reps, M, a, pool, mode, caps);

    json out = io::ideal_gens_to_json(fit);
    std::string verdict = "pass";
    if (oracle) {
        if (!G.is_abelian()) throw InputError("--oracle requires an abelian group");
        IdealGens orc;
        orc.tab = &tab;
        for (const auto& x : classical_fitting_gens(M, a))
            orc.gens.push_back(CenterElem::from_group_ring(tab, x));
        orc.dedup();
        auto cmp = ideal_compare(fit, orc, xi);
        out["oracle"] = cmp.order == IdealOrder::Equal ? "equal" : "different";
        if (cmp.order != IdealOrder::Equal) verdict = "fail";
    }
    if (!compare_file.empty()) {
        auto cj = io::read_file(compare_file);
        IdealGens other;
        other.tab = &tab;
        for (const auto& gen : cj.at("gens")) {
            auto z = CenterElem::zero(tab);
            const auto& comps = gen.at("components");
            for (auto it = comps.begin(); it != comps.end(); ++it) {
                unsigned idx = (unsigned)std::stoul(it.key().substr(3));
                z.comp.at(idx) = io::cyclo_from_json(it.value());
            }
            other.gens.push_back(std::move(z));
        }
        auto cmp = ideal_compare(fit, other, xi);
        switch (cmp.order) {
            case IdealOrder::Equal: out["compare"] = "equal"; break;
            case IdealOrder::LeftInRight: out["compare"] = "left-in-right"; break;
            case IdealOrder::RightInLeft: out["compare"] = "right-in-left"; break;
            default: out["compare"] = "incomparable";
        }
        out["compare_certificate"] = cmp.certificate;
    }
    bool bounded = !G.is_abelian();
    json report = record_json("fit",
                              "a=" + std::to_string(a) + ",mode=" + mode_str +
                                  ",matrix=" + M.label,
                              verdict == "pass" && bounded ? "bounded-pass" : verdict,
                              pool.descriptor() + ";" + xi.xi_bound, out);
    std::cout << report.dump(2) << "\n";  // generator lists are JSON either way
    return verdict == "pass" ? 0 : 1;
}

int cmd_stickelberger(const GlobalOpts& g, unsigned m, std::vector<unsigned long> s_extra,
                      std::vector<unsigned long> t_primes, unsigned a) {
    if (m < 3) throw InputError("--m must be at least 3");
    auto setup = cyclotomic_setup(m, s_extra, t_primes);
    setup.lsource.precision_digits = g.precision;
    auto theta = theta_a(*setup.table, a, setup.cfg, setup.lsource);
    auto gamma = gamma_T(setup.reps, setup.cfg);

    json out;
    out["group"] = setup.group->name();
    print_value(theta.bracket, "theta_bracket", g.json_out, out);
    print_value(theta.round, "theta_round", g.json_out, out);
    auto gamma_elem = gamma.to_group_ring();
    if (g.json_out)
        out["gamma_T"] = io::group_ring_to_json(gamma_elem);
    else
        std::cout << "gamma_T = " << gamma_elem.str() << "\n";

    auto integ = stickelberger_integrality(setup.reps, setup.cfg, setup.lsource);
    if (g.json_out)
        out["gamma_theta0"] = io::group_ring_to_json(integ.element);
    else
        std::cout << "gamma_T * theta<0> = " << integ.element.str() << "\n";
    std::string verdict = integ.integral ? "pass" : "fail";
    if (!g.json_out) std::cout << "integrality: " << verdict << "\n";

    if (g.json_out) {
        json report = record_json(
            "stickelberger", "m=" + std::to_string(m) + ",a=" + std::to_string(a), verdict,
            "exact", out);
        std::cout << report.dump(2) << "\n";
    }
    return integ.integral ? 0 : 1;
}

int cmd_linv(const GlobalOpts& g, const std::string& group_file,
             const std::string& places_file, const std::string& reg_file,
             const std::string& homs_file, const std::string& ltable_file, unsigned a,
             const std::string& theta_I_place) {
    FiniteGroup G = io::group_from_json(io::read_file(group_file));
    SConfig cfg = io::places_from_json(io::read_file(places_file), G);
    CharacterTable tab(G);
    RepSet reps = RepSet::build(tab);
    RegulatorData reg = io::regulator_from_json(io::read_file(reg_file));
    LSource src;
    src.precision_digits = g.precision;
    io::ltable_from_json(io::read_file(ltable_file), src);

    auto homs_json = io::read_file(homs_file);
    std::vector<HomMatrix> homs;
    for (const auto& hj : homs_json.at("homs")) homs.push_back(io::hom_from_json(hj));

    auto gamma = gamma_T(reps, cfg);
    json out;
    bool ok = true;
    json values = json::array();
    for (unsigned h = 0; h < homs.size(); ++h) {
        auto L = l_invariant(reps, a, homs[h], reg, cfg, src);
        auto scaled = L * gamma;
        json lj;
        lj["hom"] = h;
        json comps = json::array();
        for (unsigned i = 0; i < scaled.comp.size(); ++i) {
            json cj;
            cj["chi"] = i;
            auto z = scaled.comp[i].embed();
            cj["value"] = {z.real(), z.imag()};
            auto q = rational_reconstruct(z.real(), 10000);
            if (q && std::abs(z.imag()) < 1e-8) cj["reconstructed"] = q->get_str();
            comps.push_back(cj);
        }
        lj["gamma_L"] = comps;
        values.push_back(lj);
    }
    out["l_invariants"] = values;

    if (!theta_I_place.empty()) {
        std::set<std::string> I{theta_I_place};
        auto gens = theta_I_gens(reps, I, a, cfg, homs, reg, src);
        json gj = json::array();
        for (unsigned k = 0; k < gens.gens.size(); ++k) {
            json one;
            one["scaled_by_group_order"] = (bool)gens.scaled_by_group_order[k];
            json comps = json::array();
            for (const auto& c : gens.gens[k].comp) {
                auto z = c.embed();
                comps.push_back(json::array({z.real(), z.imag()}));
            }
            one["components"] = comps;
            gj.push_back(one);
        }
        out["theta_I"] = gj;
    }

    json report = record_json("linv", "a=" + std::to_string(a), ok ? "pass" : "fail",
                              "precision=" + std::to_string(g.precision), out);
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_suite(const GlobalOpts& g, const std::string& name, bool timings) {
    SuiteOptions opt;
    opt.seed = g.seed;
    opt.jobs = g.jobs;
    opt.precision = g.precision;
    opt.pool_support = g.pool_bound;
    opt.xi_dmax = g.xi_dmax;
    opt.xi_coeff = g.xi_coeff;
    opt.timings = timings;
    opt.fixtures_dir = g.fixtures;
    auto rep = run_suite(name, opt);
    if (g.json_out) {
        // JSON-lines: one record per check, then a summary line
        for (const auto& r : rep.records) {
            json j = record_json(r.id, r.params, r.verdict, rep.bounds,
                                 r.certificate.empty() ? json(nullptr) : json(r.certificate));
            if (timings) j["elapsed_ms"] = r.elapsed_ms;
            std::cout << j.dump() << "\n";
        }
        json summary;
        summary["suite"] = rep.suite;
        summary["version"] = rep.version;
        summary["checks"] = rep.records.size();
        summary["failures"] = rep.failures();
        summary["bounded"] = rep.bounded();
        std::cout << summary.dump() << "\n";
    } else {
        for (const auto& r : rep.records) {
            std::cout << (r.verdict == "fail" ? "FAIL " : (r.verdict == "bounded-pass"
                                                               ? "pass*"
                                                               : "pass "))
                      << " " << r.id;
            if (timings) std::cout << " (" << r.elapsed_ms << " ms)";
            if (r.verdict == "fail" && !r.certificate.empty())
                std::cout << "\n      " << r.certificate;
            std::cout << "\n";
        }
        std::cout << rep.records.size() << " checks, " << rep.failures() << " failures, "
                  << rep.bounded() << " bounded-pass (* = at declared bounds)\n";
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact group-ring, Fitting-invariant and Stickelberger toolkit"};
    app.set_version_flag("--version", kVersion);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_flag("--json", g.json_out, "machine-readable JSON output");
    app.add_option("--seed", g.seed, "seed for randomized batteries");
    app.add_option("--jobs", g.jobs, "concurrent checks in suites");
    app.add_option("--precision", g.precision, "decimal digits for numeric L-values");
    app.add_option("--pool-bound", g.pool_bound, "substitution pool support bound");
    app.add_option("--xi-bound", g.xi_dmax, "whitehead matrix size bound");
    app.add_option("--xi-coeff", g.xi_coeff, "whitehead coefficient bound");
    app.add_option("--fixtures", g.fixtures, "fixture directory for suites");

    std::string group_file, places_file, matrix_file, v_label, mode = "column";
    std::string compare_file, reg_file, homs_file, ltable_file, theta_I_place, suite_name;
    unsigned a = 0, modulus = 0;
    std::vector<unsigned long> s_extra, t_primes;
    bool oracle = false, override_caps = false, timings = false;

    auto* idem = app.add_subcommand("idem", "stratum idempotents and the identity check");
    idem->add_option("--group", group_file)->required();
    idem->add_option("--places", places_file)->required();
    idem->add_option("--a", a)->required();
    idem->add_option("--v", v_label, "restrict to one place label");

    auto* fit = app.add_subcommand("fit", "Fitting-invariant generators");
    fit->add_option("--group", group_file)->required();
    fit->add_option("--matrix", matrix_file)->required();
    fit->add_option("--a", a)->required();
    fit->add_option("--mode", mode)->check(CLI::IsMember({"column", "row"}));
    fit->add_flag("--oracle", oracle, "compare against the classical abelian oracle");
    fit->add_option("--compare", compare_file, "second generator file to compare");
    fit->add_flag("--override-caps", override_caps, "lift the enumeration caps");

    auto* stick = app.add_subcommand("stickelberger", "cyclotomic Stickelberger elements");
    stick->add_option("--m", modulus)->required();
    stick->add_option("--s-extra", s_extra, "extra finite primes for S");
    stick->add_option("--t", t_primes, "unramified primes for T");
    stick->add_option("--a", a);

    auto* linv = app.add_subcommand("linv", "Artin L-invariants from a regulator fixture");
    linv->add_option("--group", group_file)->required();
    linv->add_option("--places", places_file)->required();
    linv->add_option("--regulator", reg_file)->required();
    linv->add_option("--homs", homs_file)->required();
    linv->add_option("--ltable", ltable_file)->required();
    linv->add_option("--a", a)->required();
    linv->add_option("--theta-I", theta_I_place, "emit theta_I generators for I = {place}");

    auto* suite = app.add_subcommand("suite", "verification suites");
    suite->add_option("name", suite_name)
        ->required()
        ->check(CLI::IsMember({"algebra", "combinatorics", "fitting", "lvalues", "all"}));
    suite->add_flag("--timings", timings, "include elapsed times (non-deterministic output)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*idem) return cmd_idem(g, group_file, places_file, a, v_label);
        if (*fit)
            return cmd_fit(g, group_file, matrix_file, a, mode, oracle, compare_file,
                           override_caps);
        if (*stick) return cmd_stickelberger(g, modulus, s_extra, t_primes, a);
        if (*linv)
            return cmd_linv(g, group_file, places_file, reg_file, homs_file, ltable_file, a,
                            theta_I_place);
        if (*suite) return cmd_suite(g, suite_name, timings);
        std::cout << app.help() << "\n";
        return 0;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InadmissibleT& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "check error: " << e.what() << "\n";
        return 1;
    }
}
