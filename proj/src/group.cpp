#include "gring/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gring/errors.hpp"
#include "gring/numutil.hpp"

namespace gring {

bool Subgroup::contains(unsigned g) const {
    return std::binary_search(elems.begin(), elems.end(), g);
}

bool Subgroup::is_normal() const {
    const FiniteGroup& G = *parent;
    for (unsigned x = 0; x < G.order(); ++x)
        for (unsigned h : elems)
            if (!contains(G.conj(h, x))) return false;
    return true;
}

FiniteGroup::FiniteGroup(std::string name, unsigned order, std::vector<unsigned> mul,
                         std::vector<std::string> labels)
    : name_(std::move(name)), n_(order), mul_(std::move(mul)), labels_(std::move(labels)) {
    if (n_ == 0) throw InputError("group order must be positive");
    if (mul_.size() != (size_t)n_ * n_) throw InputError("multiplication table has wrong size");
    for (unsigned v : mul_)
        if (v >= n_) throw InputError("multiplication table entry out of range");
    if (!labels_.empty()) {
        if (labels_.size() != n_) throw InputError("label count does not match order");
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != n_) throw InputError("labels are not unique");
    }
    validate();
    compute_derived();
}

void FiniteGroup::validate() const {
    for (unsigned g = 0; g < n_; ++g)
        if (op(0, g) != g || op(g, 0) != g)
            throw InputError("index 0 is not an identity in group '" + name_ + "'");
    // full associativity loop; fine at desk scale
    for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = 0; b < n_; ++b)
            for (unsigned c = 0; c < n_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw InputError("multiplication table is not associative in '" + name_ + "'");
    for (unsigned g = 0; g < n_; ++g) {
        bool has_inv = false;
        for (unsigned h = 0; h < n_; ++h)
            if (op(g, h) == 0 && op(h, g) == 0) has_inv = true;
        if (!has_inv) throw InputError("element without inverse in '" + name_ + "'");
    }
}

void FiniteGroup::compute_derived() {
    inv_.assign(n_, 0);
    for (unsigned g = 0; g < n_; ++g)
        for (unsigned h = 0; h < n_; ++h)
            if (op(g, h) == 0) inv_[g] = h;

    elt_order_.assign(n_, 1);
    exponent_ = 1;
    for (unsigned g = 0; g < n_; ++g) {
        unsigned x = g, k = 1;
        while (x != 0) {
            x = op(x, g);
            ++k;
        }
        elt_order_[g] = k;
        exponent_ = (unsigned)lcm_long(exponent_, k);
    }

    abelian_ = true;
    for (unsigned a = 0; a < n_ && abelian_; ++a)
        for (unsigned b = a + 1; b < n_; ++b)
            if (op(a, b) != op(b, a)) {
                abelian_ = false;
                break;
            }

    class_of_.assign(n_, n_);
    for (unsigned g = 0; g < n_; ++g) {
        if (class_of_[g] != n_) continue;
        unsigned c = (unsigned)classes_.size();
        std::vector<unsigned> members;
        for (unsigned x = 0; x < n_; ++x) {
            unsigned y = conj(g, x);
            if (class_of_[y] == n_) {
                class_of_[y] = c;
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        classes_.push_back(std::move(members));
        class_reps_.push_back(classes_.back().front());
    }
}

std::string FiniteGroup::label(unsigned g) const {
    if (!labels_.empty()) return labels_[g];
    std::ostringstream os;
    os << "g" << g;
    return os.str();
}

FiniteGroup FiniteGroup::from_permutations(std::string name,
                                           const std::vector<std::vector<unsigned>>& gens,
                                           unsigned degree) {
    for (const auto& p : gens) {
        if (p.size() != degree) throw InputError("permutation generator has wrong degree");
        std::vector<bool> hit(degree, false);
        for (unsigned v : p) {
            if (v >= degree || hit[v]) throw InputError("generator is not a permutation");
            hit[v] = true;
        }
    }
    std::vector<unsigned> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<unsigned>> elems{id};
    std::vector<std::vector<unsigned>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                std::vector<unsigned> y(degree);
                for (unsigned i = 0; i < degree; ++i) y[i] = g[x[i]];  // g after x
                if (elems.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
        if (elems.size() > 4096) throw InputError("permutation group too large for desk scale");
    }
    std::vector<std::vector<unsigned>> sorted(elems.begin(), elems.end());
    // lexicographic order puts the identity first
    unsigned n = (unsigned)sorted.size();
    std::map<std::vector<unsigned>, unsigned> index;
    for (unsigned i = 0; i < n; ++i) index[sorted[i]] = i;
    std::vector<unsigned> mul(n * (size_t)n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            std::vector<unsigned> prod(degree);
            for (unsigned t = 0; t < degree; ++t) prod[t] = sorted[i][sorted[j][t]];
            mul[i * (size_t)n + j] = index[prod];
        }
    return FiniteGroup(std::move(name), n, std::move(mul));
}

FiniteGroup FiniteGroup::cyclic(unsigned n, std::string name) {
    if (name.empty()) name = "C" + std::to_string(n);
    std::vector<unsigned> mul(n * (size_t)n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) mul[i * (size_t)n + j] = (i + j) % n;
    return FiniteGroup(std::move(name), n, std::move(mul));
}

Subgroup FiniteGroup::trivial_subgroup() const { return Subgroup{this, {0}}; }

Subgroup FiniteGroup::full_subgroup() const {
    std::vector<unsigned> all(n_);
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{this, all};
}

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<unsigned>& gens) {
    for (unsigned g : gens)
        if (g >= G.order()) throw InputError("generator index out of range");
    std::set<unsigned> elems{0};
    std::vector<unsigned> frontier{0};
    while (!frontier.empty()) {
        std::vector<unsigned> next;
        for (unsigned x : frontier)
            for (unsigned g : gens) {
                for (unsigned y : {G.op(x, g), G.op(x, G.inv(g))})
                    if (elems.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return Subgroup{&G, std::vector<unsigned>(elems.begin(), elems.end())};
}

static void check_subgroup(const FiniteGroup& G, const Subgroup& H) {
    if (H.parent != &G) throw InputError("subgroup belongs to a different group");
    if (H.elems.empty() || !H.contains(0)) throw InputError("subgroup must contain the identity");
    for (unsigned a : H.elems) {
        if (a >= G.order()) throw InputError("subgroup element out of range");
        if (!H.contains(G.inv(a))) throw InputError("subgroup not closed under inversion");
        for (unsigned b : H.elems)
            if (!H.contains(G.op(a, b))) throw InputError("subgroup not closed under product");
    }
}

Subgroup normal_closure(const FiniteGroup& G, const Subgroup& H) {
    check_subgroup(G, H);
    std::vector<unsigned> gens;
    for (unsigned h : H.elems)
        for (unsigned x = 0; x < G.order(); ++x) gens.push_back(G.conj(h, x));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // closure of all conjugates: conjugates of the closure stay inside, so
    // the result is normal
    return subgroup_closure(G, gens);
}

std::pair<FiniteGroup, std::vector<unsigned>> quotient(const FiniteGroup& G, const Subgroup& N) {
    check_subgroup(G, N);
    if (!N.is_normal()) throw InputError("subgroup is not normal; cannot form quotient");
    unsigned n = G.order();
    std::vector<unsigned> coset_min(n, n);  // element -> minimal element of its coset
    for (unsigned g = 0; g < n; ++g) {
        unsigned m = n;
        for (unsigned h : N.elems) m = std::min(m, G.op(g, h));
        coset_min[g] = m;
    }
    // cosets indexed by sorted minimal representatives; identity coset is N,
    // whose minimal element is 0, so it lands at index 0
    std::vector<unsigned> reps;
    for (unsigned g = 0; g < n; ++g)
        if (coset_min[g] == g) reps.push_back(g);
    std::map<unsigned, unsigned> rep_index;
    for (unsigned i = 0; i < reps.size(); ++i) rep_index[reps[i]] = i;
    unsigned q = (unsigned)reps.size();
    std::vector<unsigned> mul(q * (size_t)q);
    for (unsigned i = 0; i < q; ++i)
        for (unsigned j = 0; j < q; ++j)
            mul[i * (size_t)q + j] = rep_index[coset_min[G.op(reps[i], reps[j])]];
    std::vector<unsigned> proj(n);
    for (unsigned g = 0; g < n; ++g) proj[g] = rep_index[coset_min[g]];
    FiniteGroup Q(G.name() + "/N" + std::to_string(N.order()), q, std::move(mul));
    return {std::move(Q), std::move(proj)};
}

std::pair<FiniteGroup, std::vector<unsigned>> subgroup_as_group(const FiniteGroup& G,
                                                                const Subgroup& H) {
    check_subgroup(G, H);
    unsigned h = H.order();
    std::map<unsigned, unsigned> pos;
    for (unsigned i = 0; i < h; ++i) pos[H.elems[i]] = i;
    std::vector<unsigned> mul(h * (size_t)h);
    for (unsigned i = 0; i < h; ++i)
        for (unsigned j = 0; j < h; ++j) mul[i * (size_t)h + j] = pos[G.op(H.elems[i], H.elems[j])];
    FiniteGroup S(G.name() + ".sub" + std::to_string(h), h, std::move(mul));
    return {std::move(S), H.elems};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
    std::set<std::vector<unsigned>> found;
    found.insert({0});
    for (unsigned g = 1; g < G.order(); ++g) found.insert(subgroup_closure(G, {g}).elems);
    // join-closure: H v <g> until stable
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<unsigned>> snapshot(found.begin(), found.end());
        for (const auto& h : snapshot)
            for (unsigned g = 1; g < G.order(); ++g) {
                if (std::binary_search(h.begin(), h.end(), g)) continue;
                std::vector<unsigned> gens = h;
                gens.push_back(g);
                auto bigger = subgroup_closure(G, gens).elems;
                if (found.insert(bigger).second) grew = true;
            }
    }
    std::vector<Subgroup> out;
    for (const auto& e : found) out.push_back(Subgroup{&G, e});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return out;
}

}  // namespace gring
