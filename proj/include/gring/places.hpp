#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gring/group_ring.hpp"

namespace gring {

// A place label together with its decomposition subgroup and, when needed,
// Frobenius element and absolute norm.  Abstract data: no field arithmetic.
struct PlaceDatum {
    std::string label;
    Subgroup decomp;
    std::optional<unsigned> frobenius;  // element of decomp
    std::optional<long> norm;           // >= 2, finite places only
    bool archimedean = false;

    void validate() const;
};

// The S/T data: S nonempty, T disjoint from S by label.  v0 names a
// distinguished place of S and is consulted only when G is trivial.
struct SConfig {
    const FiniteGroup* G = nullptr;
    std::vector<PlaceDatum> S;
    std::vector<PlaceDatum> T;
    std::optional<std::string> v0;

    void validate() const;
    unsigned s_size() const { return (unsigned)S.size(); }
    const PlaceDatum& place(const std::string& label) const;
    unsigned place_index(const std::string& label) const;
    // Number of split places (trivial decomposition group) in S.
    unsigned split_count() const;
};

// S_psi = {v in S : psi(T_{G_v}) = |G_v| psi(1)}, computed by the trace
// criterion and cross-checked against the kernel criterion
// G_v <= ker(psi).  The trivial character is rejected.
std::set<std::string> s_psi(const Character& chi, const SConfig& cfg);

// Character strata for a given a:
//   prime:   nontrivial chi with |S_chi| = a and chi(T_{G_v}) = 0 off S_chi
//   plain:   prime plus the trivial character iff a = |S| - 1
//   at_least: nontrivial chi with |S_chi| >= a, plus trivial iff a < |S|
struct CharStrata {
    std::vector<unsigned> prime;     // indices into the character table
    std::vector<unsigned> plain;     // \widehat G_{a,S}
    std::vector<unsigned> at_least;  // \widehat G_{(a),S}
};
CharStrata char_strata(const CharacterTable& tab, unsigned a, const SConfig& cfg);

// e_{a,S} and e_{(a),S}: sums of e_chi over the strata.  Exact; both are
// idempotent and fixed by iota_sharp.
struct StarkIdempotents {
    GroupRingElem e_a_S;
    GroupRingElem e_at_least_a_S;
};
StarkIdempotents stark_idempotents(const CharacterTable& tab, unsigned a, const SConfig& cfg);

// S^a_min: union of S_chi over the prime stratum for nontrivial G; the
// stated v0 cases when G is trivial.
std::set<std::string> s_min(const CharacterTable& tab, unsigned a, const SConfig& cfg);

// All size-a subsets of S^a_min, and those avoiding v.
struct WpSets {
    std::vector<std::set<std::string>> star;       // wp*_a(S)
    std::vector<std::set<std::string>> avoiding;   // wp_a(S, v)
};
WpSets wp_sets(const CharacterTable& tab, unsigned a, const SConfig& cfg,
               const std::string& v);

// e_I = e_1 + sum of e_chi over {chi in prime stratum : S_chi = I}.
// Throws InputError when I is not in wp*_a(S).
GroupRingElem e_I(const CharacterTable& tab, const std::set<std::string>& I, unsigned a,
                  const SConfig& cfg);

// e_v = e_{N_v} for N_v the normal closure of G_v.
GroupRingElem e_place(const CharacterTable& tab, const std::string& v, const SConfig& cfg);

// c^a_{S,v}: 0 if a >= |S|, else |{v} \ S^a_min| - min(|S^a_min|, |S \ S^a_min|) - delta_{a,0}.
int c_asv(const CharacterTable& tab, unsigned a, const SConfig& cfg, const std::string& v);

// Exact verification of (1 - e_v) e_{a,S} = sum_{I in wp_a(S,v)} (e_I - e_1).
struct IdentityReport {
    bool pass = false;
    unsigned a = 0;
    std::string v;
    GroupRingElem lhs;
    GroupRingElem rhs;
};
IdentityReport verify_idem_identity(const CharacterTable& tab, unsigned a, const SConfig& cfg,
                                    const std::string& v);

}  // namespace gring
