#include "gring/io.hpp"

#include <fstream>
#include <json.hpp>

#include "gring/errors.hpp"

namespace gring::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InputError(path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field '" + std::string(key) + "'");
    return *it;
}

Rat rat_from_string(const std::string& s, const std::string& path) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        fail(path, "'" + s + "' is not a rational number");
    q.canonicalize();
    if (q.get_den() <= 0) fail(path, "'" + s + "' has a nonpositive denominator");
    return q;
}

}  // namespace

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError(path + ": JSON parse error: " + e.what());
    }
    return j;
}

FiniteGroup group_from_json(const json& j) {
    std::string name = field(j, "name", "group").get<std::string>();
    bool has_mul = j.contains("mul"), has_perm = j.contains("perm_gens");
    if (has_mul == has_perm)
        fail("group." + name, "exactly one of 'mul' and 'perm_gens' must be present");
    if (has_perm) {
        unsigned degree = field(j, "degree", "group." + name).get<unsigned>();
        std::vector<std::vector<unsigned>> gens;
        for (const auto& g : field(j, "perm_gens", "group." + name))
            gens.push_back(g.get<std::vector<unsigned>>());
        return FiniteGroup::from_permutations(name, gens, degree);
    }
    unsigned order = field(j, "order", "group." + name).get<unsigned>();
    const auto& rows = field(j, "mul", "group." + name);
    if (rows.size() != order) fail("group." + name + ".mul", "row count != order");
    std::vector<unsigned> mul;
    for (const auto& row : rows) {
        if (row.size() != order) fail("group." + name + ".mul", "column count != order");
        for (const auto& v : row) mul.push_back(v.get<unsigned>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return FiniteGroup(name, order, std::move(mul), std::move(labels));
}

json group_to_json(const FiniteGroup& G) {
    json j;
    j["name"] = G.name();
    j["order"] = G.order();
    json mul = json::array();
    for (unsigned a = 0; a < G.order(); ++a) {
        json row = json::array();
        for (unsigned b = 0; b < G.order(); ++b) row.push_back(G.op(a, b));
        mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
    if (!G.labels().empty()) j["labels"] = G.labels();
    return j;
}

Cyclo cyclo_from_json(const json& j) {
    if (j.is_number_integer()) return Cyclo((long)j.get<long long>());
    if (j.is_string()) return Cyclo(rat_from_string(j.get<std::string>(), "cyclo"));
    unsigned level = field(j, "level", "cyclo").get<unsigned>();
    std::vector<Rat> coeffs;
    for (const auto& c : field(j, "coeffs", "cyclo")) {
        if (c.is_number_integer())
            coeffs.push_back(Rat((long)c.get<long long>()));
        else
            coeffs.push_back(rat_from_string(c.get<std::string>(), "cyclo.coeffs"));
    }
    if (coeffs.size() != euler_phi(level)) fail("cyclo", "coeffs length != phi(level)");
    return Cyclo(level, std::move(coeffs));
}

json cyclo_to_json(const Cyclo& x) {
    if (x.is_rational()) return x.rational().get_str();
    json j;
    j["level"] = x.level();
    json coeffs = json::array();
    for (const auto& q : x.coeffs()) coeffs.push_back(q.get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

GroupRingElem group_ring_from_json(const json& j, const FiniteGroup& G) {
    auto x = GroupRingElem::zero(G);
    const json& coeffs = j.contains("coeffs") ? j["coeffs"] : j;
    if (!coeffs.is_object()) fail("group_ring", "'coeffs' must be an object");
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        unsigned idx = G.order();
        const std::string& key = it.key();
        for (unsigned g = 0; g < G.order(); ++g)
            if (G.label(g) == key) idx = g;
        if (idx == G.order()) {
            try {
                idx = (unsigned)std::stoul(key);
            } catch (...) {
                fail("group_ring", "unknown element '" + key + "'");
            }
        }
        if (idx >= G.order()) fail("group_ring", "element index out of range: " + key);
        x.c[idx] = x.c[idx] + cyclo_from_json(it.value());
    }
    return x;
}

json group_ring_to_json(const GroupRingElem& x) {
    json coeffs = json::object();
    for (unsigned g = 0; g < x.c.size(); ++g)
        if (!x.c[g].is_zero()) coeffs[x.G->label(g)] = cyclo_to_json(x.c[g]);
    json j;
    j["group"] = x.G->name();
    j["coeffs"] = std::move(coeffs);
    return j;
}

SConfig places_from_json(const json& j, const FiniteGroup& G) {
    SConfig cfg;
    cfg.G = &G;
    auto parse_place = [&](const json& p, const std::string& path) {
        PlaceDatum d;
        d.label = field(p, "label", path).get<std::string>();
        auto gens = field(p, "decomp", path).get<std::vector<unsigned>>();
        d.decomp = subgroup_closure(G, gens);
        if (p.contains("frobenius") && !p["frobenius"].is_null())
            d.frobenius = p["frobenius"].get<unsigned>();
        if (p.contains("norm") && !p["norm"].is_null()) d.norm = p["norm"].get<long>();
        if (p.contains("archimedean")) d.archimedean = p["archimedean"].get<bool>();
        return d;
    };
    for (const auto& p : field(j, "S", "places")) cfg.S.push_back(parse_place(p, "places.S"));
    if (j.contains("T"))
        for (const auto& p : j["T"]) cfg.T.push_back(parse_place(p, "places.T"));
    if (j.contains("v0") && !j["v0"].is_null()) cfg.v0 = j["v0"].get<std::string>();
    cfg.validate();
    return cfg;
}

json places_to_json(const SConfig& cfg) {
    auto place = [](const PlaceDatum& p) {
        json d;
        d["label"] = p.label;
        d["decomp"] = p.decomp.elems;
        if (p.frobenius) d["frobenius"] = *p.frobenius;
        if (p.norm) d["norm"] = *p.norm;
        d["archimedean"] = p.archimedean;
        return d;
    };
    json j;
    j["S"] = json::array();
    for (const auto& p : cfg.S) j["S"].push_back(place(p));
    j["T"] = json::array();
    for (const auto& p : cfg.T) j["T"].push_back(place(p));
    if (cfg.v0) j["v0"] = *cfg.v0;
    return j;
}

PresentationMatrix matrix_from_json(const json& j, const FiniteGroup& G) {
    PresentationMatrix M;
    M.G = &G;
    if (j.contains("group") && j["group"].get<std::string>() != G.name())
        fail("matrix", "matrix group '" + j["group"].get<std::string>() +
                           "' does not match '" + G.name() + "'");
    M.d = field(j, "rows", "matrix").get<unsigned>();
    M.dp = field(j, "cols", "matrix").get<unsigned>();
    M.label = j.contains("label") ? j["label"].get<std::string>() : "m";
    for (const auto& row : field(j, "entries", "matrix")) {
        std::vector<GroupRingElem> r;
        for (const auto& e : row) r.push_back(group_ring_from_json(e, G));
        M.entries.push_back(std::move(r));
    }
    M.validate();
    return M;
}

json matrix_to_json(const PresentationMatrix& M) {
    json j;
    j["group"] = M.G->name();
    j["rows"] = M.d;
    j["cols"] = M.dp;
    j["label"] = M.label;
    json entries = json::array();
    for (const auto& row : M.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(group_ring_to_json(e));
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return j;
}

RegulatorData regulator_from_json(const json& j) {
    RegulatorData reg;
    reg.unit_labels = field(j, "units", "regulator").get<std::vector<std::string>>();
    reg.place_labels = field(j, "places", "regulator").get<std::vector<std::string>>();
    for (const auto& row : field(j, "logs", "regulator"))
        reg.logs.push_back(row.get<std::vector<double>>());
    reg.precision_digits = field(j, "precision", "regulator").get<unsigned>();
    for (const auto& act : field(j, "action", "regulator")) {
        std::vector<std::vector<long>> ua;
        for (const auto& row : field(act, "units", "regulator.action"))
            ua.push_back(row.get<std::vector<long>>());
        reg.unit_action.push_back(std::move(ua));
        reg.place_action.push_back(
            field(act, "places", "regulator.action").get<std::vector<unsigned>>());
    }
    if (j.contains("above"))
        for (auto it = j["above"].begin(); it != j["above"].end(); ++it)
            reg.above[it.key()] = it.value().get<std::vector<unsigned>>();
    return reg;
}

HomMatrix hom_from_json(const json& j) {
    HomMatrix h;
    const json& rows = j.contains("rows") ? j["rows"] : j;
    for (const auto& row : rows) h.m.push_back(row.get<std::vector<long>>());
    return h;
}

void ltable_from_json(const json& j, LSource& src) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key.rfind("chi", 0) != 0) fail("ltable", "character id must look like 'chi<i>'");
        unsigned idx = (unsigned)std::stoul(key.substr(3));
        LSource::TableEntry entry;
        entry.order = field(it.value(), "order", "ltable." + key).get<unsigned>();
        const json& lead = field(it.value(), "leading", "ltable." + key);
        if (lead.is_array())
            entry.leading = {lead.at(0).get<double>(), lead.at(1).get<double>()};
        else
            entry.leading = {lead.get<double>(), 0.0};
        unsigned prec = it.value().contains("prec") ? it.value()["prec"].get<unsigned>() : 10;
        entry.err = std::pow(10.0, -(double)prec);
        src.table[idx] = entry;
    }
}

std::vector<MatrixRep> reps_from_json(const json& j, const CharacterTable& tab) {
    const FiniteGroup& G = tab.group();
    std::vector<MatrixRep> reps;
    for (const auto& rj : j) {
        MatrixRep rep;
        rep.group = &G;
        rep.dim = field(rj, "dim", "reps").get<unsigned>();
        const auto& mats = field(rj, "mats", "reps");
        if (mats.size() != G.order()) fail("reps", "one matrix per group element required");
        for (const auto& mj : mats) {
            std::vector<Cyclo> m;
            for (const auto& row : mj) {
                if (row.size() != rep.dim) fail("reps", "matrix row has wrong length");
                for (const auto& e : row) m.push_back(cyclo_from_json(e));
            }
            if (m.size() != (size_t)rep.dim * rep.dim) fail("reps", "matrix has wrong shape");
            rep.mats.push_back(std::move(m));
        }
        reps.push_back(std::move(rep));
    }
    return reps;
}

json center_to_json(const CenterElem& x) {
    json comps = json::object();
    for (unsigned i = 0; i < x.comp.size(); ++i)
        if (!x.comp[i].is_zero()) comps["chi" + std::to_string(i)] = cyclo_to_json(x.comp[i]);
    json j;
    j["components"] = std::move(comps);
    return j;
}

json ideal_gens_to_json(const IdealGens& gens) {
    json j;
    j["gens"] = json::array();
    for (const auto& g : gens.gens) j["gens"].push_back(center_to_json(g));
    j["xi_bound"] = gens.xi_bound;
    j["phi_pool"] = gens.phi_pool;
    return j;
}

json table_to_json(const CharacterTable& tab) {
    const FiniteGroup& G = tab.group();
    json j;
    j["group"] = G.name();
    j["level"] = tab.level();
    json reps = json::array();
    for (unsigned c = 0; c < G.num_classes(); ++c) reps.push_back(G.class_rep(c));
    j["class_reps"] = std::move(reps);
    json deg = json::array(), vals = json::array();
    for (const auto& chi : tab.characters()) {
        deg.push_back(chi.degree);
        json row = json::array();
        for (unsigned c = 0; c < G.num_classes(); ++c)
            row.push_back(cyclo_to_json(chi.values[G.class_rep(c)]));
        vals.push_back(std::move(row));
    }
    j["degrees"] = std::move(deg);
    j["values"] = std::move(vals);
    return j;
}

DirichletChar dirichlet_from_json(const json& j) {
    DirichletChar chi;
    chi.modulus = field(j, "modulus", "dirichlet").get<unsigned>();
    unsigned root_order = euler_phi(chi.modulus);
    chi.values.assign(chi.modulus, Cyclo::zero());
    if (chi.modulus == 1) {
        chi.values[0] = Cyclo::one();
        return chi;
    }
    for (auto it = field(j, "char", "dirichlet").begin(); it != j["char"].end(); ++it) {
        unsigned a = (unsigned)std::stoul(it.key()) % chi.modulus;
        long e = it.value().get<long>();
        chi.values[a] = Cyclo::root_of_unity(root_order, e);
    }
    chi.validate();
    return chi;
}

}  // namespace gring::io
