#include "gring/stickelberger.hpp"

#include "gring/errors.hpp"
#include "gring/lseries.hpp"

namespace gring {

CenterValue CenterValue::zero(const CharacterTable& t) {
    CenterValue v;
    v.tab = &t;
    v.comp.assign(t.size(), Comp{});
    return v;
}

CenterValue CenterValue::from_exact(const CenterElem& e) {
    CenterValue v;
    v.tab = e.tab;
    v.comp.resize(e.comp.size());
    for (unsigned i = 0; i < e.comp.size(); ++i) v.comp[i].val = e.comp[i];
    return v;
}

bool CenterValue::all_exact() const {
    for (const auto& c : comp)
        if (!c.exact) return false;
    return true;
}

CenterElem CenterValue::exact() const {
    CenterElem e = CenterElem::zero(*tab);
    for (unsigned i = 0; i < comp.size(); ++i) {
        if (!comp[i].exact)
            throw ArithmeticError("component " + std::to_string(i) + " is numeric");
        e.comp[i] = comp[i].val;
    }
    return e;
}

CenterValue operator*(const CenterValue& a, const CenterValue& b) {
    if (a.tab != b.tab) throw InputError("center values over different tables");
    CenterValue r = a;
    for (unsigned i = 0; i < r.comp.size(); ++i) {
        const auto& x = a.comp[i];
        const auto& y = b.comp[i];
        auto& o = r.comp[i];
        if (x.exact && y.exact) {
            o.exact = true;
            o.val = x.val * y.val;
        } else if (x.is_exact_zero() || y.is_exact_zero()) {
            o = CenterValue::Comp{};  // exact zero
        } else {
            o.exact = false;
            o.num = x.embed() * y.embed();
            // first-order error propagation
            o.err = x.err * std::abs(y.embed()) + y.err * std::abs(x.embed()) + 1e-15;
            o.val = Cyclo();
        }
    }
    return r;
}

CenterValue operator*(const CenterValue& a, const CenterElem& b) {
    return a * CenterValue::from_exact(b);
}

unsigned ord_vanishing(const Character& chi, const SConfig& cfg) {
    cfg.validate();
    if (chi.is_trivial()) return cfg.s_size() - 1;
    Cyclo total;
    for (const auto& p : cfg.S) {
        Cyclo s = chi.sum_over(p.decomp);
        total += s * Cyclo(make_rat(Int(1), Int(p.decomp.order())));
    }
    if (!total.is_rational())
        throw ArithmeticError("fixed-space count is not rational for a character");
    Rat q = total.rational();
    if (q.get_den() != 1 || q < 0)
        throw ArithmeticError("fixed-space count is not a nonnegative integer");
    return (unsigned)q.get_num().get_ui();
}

ThetaResult theta_a(const CharacterTable& tab, unsigned a, const SConfig& cfg,
                    const LSource& src) {
    cfg.validate();
    auto strata = char_strata(tab, a, cfg);
    ThetaResult res{CenterValue::zero(tab), CenterValue::zero(tab)};

    for (unsigned i = 0; i < tab.size(); ++i) {
        unsigned dual = tab.contragredient(i);
        unsigned need = a * tab.at(i).degree;
        unsigned ord = ord_vanishing(tab.at(dual), cfg);
        CenterValue::Comp c;  // exact zero by default
        if (need > ord) {
            // L^{need}(chi-check, s) has a pole at 0: excluded from the sum
            c = CenterValue::Comp{};
        } else if (need < ord) {
            c = CenterValue::Comp{};  // holomorphic and vanishing: exactly 0
        } else if (need == 0 && src.has_dirichlet) {
            c.exact = true;
            c.val = l_value_at_zero(src.dchars[dual], src.s_primes);
        } else {
            auto it = src.table.find(i);
            if (it != src.table.end()) {
                if (it->second.order != need)
                    throw ArithmeticError("numeric table order mismatch at character " +
                                          std::to_string(i));
                c.exact = false;
                c.num = it->second.leading;
                c.err = it->second.err;
            } else if (src.has_dirichlet) {
                auto lt = leading_term_numeric(src.dchars[dual], src.s_primes, need,
                                               src.precision_digits);
                c.exact = false;
                c.num = lt.value;
                c.err = lt.err;
            } else {
                throw InputError("no L-data for character " + std::to_string(i) +
                                 " at derived order " + std::to_string(need));
            }
        }
        res.bracket.comp[i] = c;
        bool in_round =
            std::find(strata.at_least.begin(), strata.at_least.end(), i) != strata.at_least.end();
        if (in_round) res.round.comp[i] = c;
    }
    return res;
}

CenterElem gamma_T(const RepSet& reps, const SConfig& cfg) {
    cfg.validate();
    const CharacterTable& tab = *reps.table;
    const FiniteGroup& G = tab.group();
    CenterElem out = CenterElem::one(tab);
    for (const auto& p : cfg.T) {
        if (!p.frobenius || !p.norm)
            throw InadmissibleT("T-place '" + p.label + "' lacks Frobenius or norm");
        auto x = GroupRingElem::one(G);
        x.c[G.inv(*p.frobenius)] -= Cyclo(*p.norm);
        auto factor = nrd(reps, {{x}});
        for (unsigned i = 0; i < factor.comp.size(); ++i)
            if (factor.comp[i].is_zero())
                throw InadmissibleT("Euler factor at '" + p.label +
                                    "' is not invertible (component " + std::to_string(i) +
                                    " vanishes)");
        out = out * factor;
    }
    return out;
}

IntegralityReport stickelberger_integrality(const RepSet& reps, const SConfig& cfg,
                                            const LSource& src) {
    auto theta = theta_a(*reps.table, 0, cfg, src);
    auto gamma = gamma_T(reps, cfg);
    auto product = theta.bracket * gamma;
    IntegralityReport rep;
    rep.element = product.exact().to_group_ring();
    rep.integral = true;
    for (const auto& c : rep.element.c) {
        if (!c.is_rational()) throw ArithmeticError("non-rational Stickelberger coefficient");
        if (c.rational().get_den() != 1) rep.integral = false;
    }
    return rep;
}

}  // namespace gring
