#pragma once

#include <map>

#include "gring/stickelberger.hpp"

namespace gring {

// Logarithm data for the S_L-places of an extension, with the G-action on
// units and places.  Units are a Z-basis of O^x_{L,S} modulo torsion; places
// index the columns of `logs`.
struct RegulatorData {
    std::vector<std::string> unit_labels;
    std::vector<std::string> place_labels;
    std::vector<std::vector<double>> logs;  // logs[i][w] = log|u_i|_w
    unsigned precision_digits = 12;
    // per group element g: unit_action[g] is the integer matrix of g on the
    // unit lattice (columns = images of the basis), place_action[g] the
    // permutation w -> g(w)
    std::vector<std::vector<std::vector<long>>> unit_action;
    std::vector<std::vector<unsigned>> place_action;
    // K-place label -> indices of the L-places above it; the first entry is
    // the designated place w_v
    std::map<std::string, std::vector<unsigned>> above;

    unsigned units() const { return (unsigned)unit_labels.size(); }
    unsigned places() const { return (unsigned)place_labels.size(); }
    // Product-formula rows, action consistency, log equivariance (within the
    // declared precision).  Throws InputError on structural faults.
    void validate(const FiniteGroup& G) const;
};

// G-equivariant map O^x -> X_{L,S} as an integer matrix in the bases
// (units) -> (w_i - w_last).
struct HomMatrix {
    std::vector<std::vector<long>> m;  // (places-1) x units
    void validate(const RegulatorData& reg, const FiniteGroup& G);  // equivariance
};

// Nrd((R psi) o R_{L,S}^{-1}) per character: the determinant of the composite
// on the multiplicity space of each irreducible.  Components are numeric
// (exact zero where the multiplicity space is zero-dimensional: det of an
// empty block is 1).
CenterValue regulator_R(const RepSet& reps, const HomMatrix& psi, const RegulatorData& reg);

// L^a(phi) = theta^{<a>}(0) * Nrd((R phi) o R^{-1}).
CenterValue l_invariant(const RepSet& reps, unsigned a, const HomMatrix& phi,
                        const RegulatorData& reg, const SConfig& cfg, const LSource& src);

// Is psi in Hom^I (the preimage of im(nu_{I,*}))?  Decided by solving the
// integer lifting system through Z[G]^{|I|} -> Y_{L,I}.
bool in_hom_I(const HomMatrix& psi, const std::set<std::string>& I, const RegulatorData& reg,
              const FiniteGroup& G);

// Generator family {e_I (gamma_T theta^{(a)}(0)) R(psi)}.  Homs outside
// Hom^I are replaced by |G| psi and flagged (|G| Hom <= Hom^I always).
struct ThetaIGens {
    std::vector<CenterValue> gens;
    std::vector<bool> scaled_by_group_order;
    std::string bounds;
};
ThetaIGens theta_I_gens(const RepSet& reps, const std::set<std::string>& I, unsigned a,
                        const SConfig& cfg, const std::vector<HomMatrix>& hom_list,
                        const RegulatorData& reg, const LSource& src);

// Duality pairing cross-check: for a tuple {phi_v}_{v in I} of maps
// O^x -> Z[G], compare
//   e_I theta^{(a)}_{S,T} Nrd((phi_v o R^{-1})(w_{v'} - w_I))_{v,v'}
// against e_I theta^{(a)}_{S,T} R(psi_{phi}) for the assembled psi_phi.
struct PairingCheck {
    CenterValue pairing_side;
    CenterValue regulator_side;
    double max_deviation = 0.0;
    bool pass = false;
};
// Each phi_v is a |G| x units integer matrix: column j holds the group-ring
// coefficients of phi_v(u_j).
PairingCheck theta_I_crosscheck(const RepSet& reps, const std::set<std::string>& I, unsigned a,
                                const SConfig& cfg,
                                const std::vector<std::vector<std::vector<long>>>& phi_tuple,
                                const RegulatorData& reg, const LSource& src, double tol = 1e-8);

}  // namespace gring
