#include "gring/places.hpp"

#include <algorithm>

#include "gring/errors.hpp"

namespace gring {

void PlaceDatum::validate() const {
    if (label.empty()) throw InputError("place label must be nonempty");
    if (frobenius && !decomp.contains(*frobenius))
        throw InputError("Frobenius of place '" + label + "' is not in its decomposition group");
    if (norm && *norm < 2) throw InputError("norm of place '" + label + "' must be >= 2");
    if (norm && archimedean)
        throw InputError("archimedean place '" + label + "' cannot carry a norm");
}

void SConfig::validate() const {
    if (!G) throw InputError("SConfig without a group");
    if (S.empty()) throw InputError("S must be nonempty");
    std::set<std::string> labels;
    for (const auto& p : S) {
        p.validate();
        if (p.decomp.parent != G) throw InputError("decomposition group has a foreign parent");
        if (!labels.insert(p.label).second)
            throw InputError("duplicate place label '" + p.label + "'");
    }
    for (const auto& p : T) {
        p.validate();
        if (p.decomp.parent != G) throw InputError("decomposition group has a foreign parent");
        if (!labels.insert(p.label).second)
            throw InputError("place label '" + p.label + "' appears in both S and T");
    }
    if (G->order() == 1 && !v0)
        throw InputError("v0 must be supplied when the group is trivial");
    if (v0) place(*v0);  // must resolve
}

const PlaceDatum& SConfig::place(const std::string& label) const {
    for (const auto& p : S)
        if (p.label == label) return p;
    throw InputError("place '" + label + "' is not in S");
}

unsigned SConfig::place_index(const std::string& label) const {
    for (unsigned i = 0; i < S.size(); ++i)
        if (S[i].label == label) return i;
    throw InputError("place '" + label + "' is not in S");
}

unsigned SConfig::split_count() const {
    unsigned c = 0;
    for (const auto& p : S)
        if (p.decomp.order() == 1) ++c;
    return c;
}

std::set<std::string> s_psi(const Character& chi, const SConfig& cfg) {
    if (chi.is_trivial()) throw InputError("S_psi is not defined for the trivial character");
    std::set<std::string> out;
    for (const auto& p : cfg.S) {
        // trace criterion: chi(T_{G_v}) = |G_v| chi(1)
        Cyclo trace = chi.sum_over(p.decomp);
        bool by_trace = trace == Cyclo((long)(p.decomp.order() * chi.degree));
        // kernel criterion: G_v <= ker(chi), i.e. chi(h) = chi(1) on G_v
        bool by_kernel = true;
        for (unsigned h : p.decomp.elems)
            if (!(chi.values[h] == Cyclo((long)chi.degree))) by_kernel = false;
        if (by_trace != by_kernel)
            throw ArithmeticError("S_psi criteria disagree at place '" + p.label + "'");
        if (by_trace) out.insert(p.label);
    }
    return out;
}

CharStrata char_strata(const CharacterTable& tab, unsigned a, const SConfig& cfg) {
    cfg.validate();
    CharStrata st;
    unsigned s = cfg.s_size();
    for (unsigned i = 0; i < tab.size(); ++i) {
        const Character& chi = tab.at(i);
        if (chi.is_trivial()) continue;
        auto sp = s_psi(chi, cfg);
        if (sp.size() >= a) st.at_least.push_back(i);
        if (sp.size() != a) continue;
        bool vanishing = true;
        for (const auto& p : cfg.S) {
            if (sp.count(p.label)) continue;
            if (!chi.sum_over(p.decomp).is_zero()) vanishing = false;
        }
        if (vanishing) st.prime.push_back(i);
    }
    st.plain = st.prime;
    if (a + 1 == s) st.plain.insert(st.plain.begin(), 0);  // trivial character index 0
    if (a < s) st.at_least.insert(st.at_least.begin(), 0);
    std::sort(st.plain.begin(), st.plain.end());
    std::sort(st.at_least.begin(), st.at_least.end());
    return st;
}

static GroupRingElem sum_e_psi(const CharacterTable& tab, const std::vector<unsigned>& idx) {
    auto x = GroupRingElem::zero(tab.group());
    for (unsigned i : idx) x = x + e_psi(tab.at(i));
    return x;
}

StarkIdempotents stark_idempotents(const CharacterTable& tab, unsigned a, const SConfig& cfg) {
    auto st = char_strata(tab, a, cfg);
    return StarkIdempotents{sum_e_psi(tab, st.plain), sum_e_psi(tab, st.at_least)};
}

std::set<std::string> s_min(const CharacterTable& tab, unsigned a, const SConfig& cfg) {
    cfg.validate();
    const FiniteGroup& G = tab.group();
    if (G.order() == 1) {
        std::set<std::string> out;
        if (a + 1 == cfg.s_size()) {
            for (const auto& p : cfg.S)
                if (p.label != *cfg.v0) out.insert(p.label);
        }
        return out;
    }
    auto st = char_strata(tab, a, cfg);
    std::set<std::string> out;
    for (unsigned i : st.prime) {
        auto sp = s_psi(tab.at(i), cfg);
        out.insert(sp.begin(), sp.end());
    }
    return out;
}

namespace {

void subsets_of_size(const std::vector<std::string>& pool, unsigned a,
                     std::vector<std::set<std::string>>& out) {
    std::vector<unsigned> idx(a);
    if (a > pool.size()) return;
    // lexicographic index tuples
    for (unsigned i = 0; i < a; ++i) idx[i] = i;
    while (true) {
        std::set<std::string> s;
        for (unsigned i : idx) s.insert(pool[i]);
        out.push_back(std::move(s));
        if (a == 0) break;
        int i = (int)a - 1;
        while (i >= 0 && idx[i] == pool.size() - a + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (unsigned j = i + 1; j < a; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

WpSets wp_sets(const CharacterTable& tab, unsigned a, const SConfig& cfg,
               const std::string& v) {
    cfg.place(v);  // v in S
    auto smin = s_min(tab, a, cfg);
    std::vector<std::string> pool(smin.begin(), smin.end());
    WpSets out;
    subsets_of_size(pool, a, out.star);
    for (const auto& I : out.star)
        if (!I.count(v)) out.avoiding.push_back(I);
    return out;
}

GroupRingElem e_I(const CharacterTable& tab, const std::set<std::string>& I, unsigned a,
                  const SConfig& cfg) {
    auto w = wp_sets(tab, a, cfg, cfg.S.front().label);
    if (std::find(w.star.begin(), w.star.end(), I) == w.star.end())
        throw InputError("I is not an element of wp*_a(S)");
    auto st = char_strata(tab, a, cfg);
    auto x = e_psi(tab.at(0));
    for (unsigned i : st.prime)
        if (s_psi(tab.at(i), cfg) == I) x = x + e_psi(tab.at(i));
    return x;
}

GroupRingElem e_place(const CharacterTable& tab, const std::string& v, const SConfig& cfg) {
    const PlaceDatum& p = cfg.place(v);
    auto Nv = normal_closure(tab.group(), p.decomp);
    return e_subgroup(Nv);
}

int c_asv(const CharacterTable& tab, unsigned a, const SConfig& cfg, const std::string& v) {
    cfg.place(v);
    unsigned s = cfg.s_size();
    if (a >= s) return 0;
    auto smin = s_min(tab, a, cfg);
    int in_smin = smin.count(v) ? 0 : 1;  // |{v} \ S^a_min|
    int m = (int)std::min(smin.size(), (size_t)s - smin.size());
    int delta = (a == 0) ? 1 : 0;
    return in_smin - m - delta;
}

IdentityReport verify_idem_identity(const CharacterTable& tab, unsigned a, const SConfig& cfg,
                                    const std::string& v) {
    const FiniteGroup& G = tab.group();
    auto idem = stark_idempotents(tab, a, cfg);
    auto lhs = (GroupRingElem::one(G) - e_place(tab, v, cfg)) * idem.e_a_S;
    auto w = wp_sets(tab, a, cfg, v);
    auto rhs = GroupRingElem::zero(G);
    auto e1 = e_psi(tab.at(0));
    for (const auto& I : w.avoiding) rhs = rhs + (e_I(tab, I, a, cfg) - e1);
    IdentityReport rep;
    rep.pass = lhs == rhs;
    rep.a = a;
    rep.v = v;
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
}

}  // namespace gring
