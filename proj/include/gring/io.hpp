#pragma once

#include <json.hpp>
#include <string>

#include "gring/fitting.hpp"
#include "gring/regulator.hpp"

// JSON bindings for the on-disk formats.  Parse failures raise InputError
// with the offending field path.
namespace gring::io {

using json = nlohmann::json;

json read_file(const std::string& path);

// {"name", "order", "mul", "labels"?} or {"name", "perm_gens", "degree"}
FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& G);

// {"level": n, "coeffs": ["p/q", ...]}; plain "p/q" or integers accepted as
// level-1 shorthand
Cyclo cyclo_from_json(const json& j);
json cyclo_to_json(const Cyclo& x);

// {"coeffs": {"<element-label-or-index>": CycloNum, ...}, "group"?}
GroupRingElem group_ring_from_json(const json& j, const FiniteGroup& G);
json group_ring_to_json(const GroupRingElem& x);

// {"S": [places...], "T": [places...], "v0"?}; each place is {"label",
// "decomp": [elt indices], "frobenius"?, "norm"?, "archimedean"}
SConfig places_from_json(const json& j, const FiniteGroup& G);
json places_to_json(const SConfig& cfg);

// {"group": name, "rows", "cols", "entries": [[GroupRingElem,...],...],
// "label"}
PresentationMatrix matrix_from_json(const json& j, const FiniteGroup& G);
json matrix_to_json(const PresentationMatrix& M);

// {"units", "places", "logs", "precision", "action": [{"units", "places"}],
// "above": {label: [indices]}}
RegulatorData regulator_from_json(const json& j);

// {"m": ..., "rows": [(places-1) x units integers]} for hom matrices
HomMatrix hom_from_json(const json& j);

// numeric leading-term table {"chi<i>": {"order", "leading", "prec"}};
// leading is a float or an [re, im] pair
void ltable_from_json(const json& j, LSource& src);

// External representation set: [{"dim": n, "mats": [per element, an n x n
// CycloNum array]}], one entry per irreducible in table order.
std::vector<MatrixRep> reps_from_json(const json& j, const CharacterTable& tab);

// {"components": {"chi<i>": CycloNum, ...}}
json center_to_json(const CenterElem& x);
json ideal_gens_to_json(const IdealGens& gens);

// character-table export: class representatives, degrees, value matrix
json table_to_json(const CharacterTable& tab);

// Dirichlet fixture {"modulus": m, "char": {"a": exponent, ...}} with
// exponents relative to zeta_phi(m)
DirichletChar dirichlet_from_json(const json& j);

}  // namespace gring::io
