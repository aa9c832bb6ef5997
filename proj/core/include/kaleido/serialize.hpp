#pragma once

#include <nlohmann/json.hpp>

#include "kaleido/apparitions.hpp"
#include "kaleido/designs.hpp"
#include "kaleido/golden.hpp"
#include "kaleido/hexagon.hpp"
#include "kaleido/incidence.hpp"
#include "kaleido/states.hpp"
#include "kaleido/transforms.hpp"

// JSON forms of the domain types. Observables are their two-letter names,
// complex numbers are [re, im] pairs, squares are named "S1".."S10".
namespace kaleido {

using nlohmann::json;

void to_json(json &j, const Observable &o);
void from_json(const json &j, Observable &o);

void to_json(json &j, const GaussianInt &z);
void from_json(const json &j, GaussianInt &z);

void to_json(json &j, const Triad &t);  // {"members":["IZ","ZI","ZZ"],"sign":1}
void from_json(const json &j, Triad &t);

void to_json(json &j, const StateVec &s);  // {"label":37,"coords":[[1,0],[0,0],[0,0],[0,1]]}
void from_json(const json &j, StateVec &s);

void to_json(json &j, const MagicSquare &s);  // {"id":"S1","rows":[[...]],"line_signs":[...]}
void from_json(const json &j, MagicSquare &s);

void to_json(json &j, const Tetrad &t);  // [1,2,3,4]
void from_json(const json &j, Tetrad &t);

void to_json(json &j, const Line &l);  // [1,5,10]
void from_json(const json &j, Line &l);

void to_json(json &j, const ReyeConfig &c);  // {"points":[...],"lines":[[...],...]}
void from_json(const json &j, ReyeConfig &c);

void to_json(json &j, const PartnerPairing &p);  // [[[1,5,10],[16,20,24]],...]
void from_json(const json &j, PartnerPairing &p);

void to_json(json &j, const Apparition &a);  // {"square":"S1","kind":18,"excluded":[...],"tetrads":[[...],...]}
void from_json(const json &j, Apparition &a);

void to_json(json &j, const QbdSymbol &q);  // {"b":105,"v":60,"r":7,"k":4,"pairs":[[1,12],[3,3]]}
void from_json(const json &j, QbdSymbol &q);

void to_json(json &j, const SymplecticMap &m);  // four rows of four bits
void from_json(const json &j, SymplecticMap &m);

/// Rows of entries {"num":[re,im],"den":d}, each entry in lowest terms.
void to_json(json &j, const ScaledMatrix &m);
void from_json(const json &j, ScaledMatrix &m);

void to_json(json &j, const Check &c);

namespace golden {
void to_json(json &j, const Tables &t);
}

}  // namespace kaleido
