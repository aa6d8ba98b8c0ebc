#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gring {

class FiniteGroup;

// Subgroup as a value object: sorted element indices of the parent group.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<unsigned> elems;  // sorted, contains 0 (the identity)

    unsigned order() const { return (unsigned)elems.size(); }
    bool contains(unsigned g) const;
    bool is_normal() const;
    bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
};

// Multiplication-table-backed finite group.  Index 0 is the identity.
// Immutable after construction; construction validates the group axioms.
class FiniteGroup {
public:
    // mul[i*n+j] = index of g_i * g_j.  Throws InputError on axiom violation.
    FiniteGroup(std::string name, unsigned order, std::vector<unsigned> mul,
                std::vector<std::string> labels = {});

    // Group generated by permutations of {0,...,degree-1}; elements are
    // enumerated and sorted lexicographically, which puts the identity first.
    static FiniteGroup from_permutations(std::string name,
                                         const std::vector<std::vector<unsigned>>& gens,
                                         unsigned degree);

    static FiniteGroup cyclic(unsigned n, std::string name = "");

    const std::string& name() const { return name_; }
    unsigned order() const { return n_; }
    unsigned op(unsigned g, unsigned h) const { return mul_[g * n_ + h]; }
    unsigned inv(unsigned g) const { return inv_[g]; }
    unsigned conj(unsigned g, unsigned x) const { return op(op(x, g), inv(x)); }  // x g x^{-1}
    unsigned element_order(unsigned g) const { return elt_order_[g]; }
    unsigned exponent() const { return exponent_; }
    bool is_abelian() const { return abelian_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(unsigned g) const;

    unsigned num_classes() const { return (unsigned)class_reps_.size(); }
    unsigned class_of(unsigned g) const { return class_of_[g]; }
    unsigned class_rep(unsigned c) const { return class_reps_[c]; }
    const std::vector<unsigned>& class_members(unsigned c) const { return classes_[c]; }
    // Partition of the element indices into conjugacy classes.
    const std::vector<std::vector<unsigned>>& conjugacy_classes() const { return classes_; }

    Subgroup trivial_subgroup() const;
    Subgroup full_subgroup() const;

private:
    std::string name_;
    unsigned n_;
    std::vector<unsigned> mul_;
    std::vector<unsigned> inv_;
    std::vector<std::string> labels_;
    std::vector<unsigned> elt_order_;
    unsigned exponent_;
    bool abelian_;
    std::vector<std::vector<unsigned>> classes_;
    std::vector<unsigned> class_of_;
    std::vector<unsigned> class_reps_;

    void validate() const;
    void compute_derived();
};

// Smallest subgroup of G containing gens.  Throws InputError on a bad index.
Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<unsigned>& gens);

// Smallest normal subgroup of G containing H.  Throws InputError if H is not
// a subgroup of G.
Subgroup normal_closure(const FiniteGroup& G, const Subgroup& H);

// Quotient G/N together with the projection map (element -> coset index).
// Throws InputError if N is not normal.
std::pair<FiniteGroup, std::vector<unsigned>> quotient(const FiniteGroup& G, const Subgroup& N);

// The subgroup H as a group in its own right, plus the index map H -> G.
std::pair<FiniteGroup, std::vector<unsigned>> subgroup_as_group(const FiniteGroup& G,
                                                                const Subgroup& H);

// All subgroups of G, ordered by (order, element list).  Desk scale only.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

}  // namespace gring
