#pragma once

#include "conformal/cohom.hpp"

#include <array>
#include <map>

namespace conformal {

// Complete data of a 2-term conformal L-infinity algebra:
// V1 --d--> V0, l2 on V0 and on V0 x V1, l3: V0^3 -> V1[L1,L2].
// l2(h,x) is never stored; it is defined by l2_lam(x,h) + l2_{-D-lam}(h,x) = 0,
// and l2(h,k) = 0.
struct TwoTermData {
    std::string name;
    CModPtr V0, V1;
    ConfMap d;             // lambda-free, V1 -> V0
    BracketTable l2_00;    // on V0
    ActionTable l2_01;     // V0 acting on V1, Side::Left
    std::map<std::array<int, 3>, ModElem> l3;   // over V1, Polys in (L1, L2, D)

    ModElem l3_at(int i, int j, int k) const;
    static TwoTermData make(std::string name, CModPtr v0, CModPtr v1, ConfMap d,
                            BracketTable l2_00, ActionTable l2_01);
};

// Evaluators implementing the sesquilinear extension rules.
ModElem tt_l2_00(const TwoTermData& t, const ModElem& x, Var nu, const ModElem& y);
ModElem tt_l2_01(const TwoTermData& t, const ModElem& x, Var nu, const ModElem& h);
ModElem tt_l2_01_at(const TwoTermData& t, const ModElem& x, const Poly& nu, const ModElem& h);
// l2(h, x) via condition (b).
ModElem tt_l2_10_at(const TwoTermData& t, const ModElem& h, const Poly& nu, const ModElem& x);
// Trilinear family evaluation: slot rules D -> -nu1 / -nu2 / D+nu1+nu2.
ModElem tt_l3(const TwoTermData& t, const ModElem& x, const ModElem& y, const ModElem& z,
              const Poly& nu1, const Poly& nu2);

// The nine conditions (a)-(i).
Report check_2term(const TwoTermData& t);

enum class TwoTermClass { Skeletal, Strict, Both, Neither };
TwoTermClass classify(const TwoTermData& t);
std::string class_name(TwoTermClass c);

bool twoterm_equal(const TwoTermData& a, const TwoTermData& b);
// Equality after solving for an invertible C[D]-relabeling of V1.
bool twoterm_equal_up_to_v1(const TwoTermData& a, const TwoTermData& b, std::string* why);

// Morphism f = (f0, f1, f2) between two-term data; f2 valued over the target V1.
struct MorphismData {
    std::string name;
    ConfMap f0, f1;        // lambda-free
    std::map<std::array<int, 2>, ModElem> f2;   // over target V1, Polys in (L1, D)

    ModElem f2_at(int i, int j, const CModPtr& target_v1) const;
    static MorphismData identity(const TwoTermData& t);
};

ModElem morph_f2(const MorphismData& f, const CModPtr& target_v1, const ModElem& x,
                 const ModElem& y, const Poly& nu);

Report check_morphism(const MorphismData& f, const TwoTermData& s, const TwoTermData& t);
MorphismData compose_morphisms(const MorphismData& g, const MorphismData& f,
                               const TwoTermData& s, const TwoTermData& mid,
                               const TwoTermData& t);

// Crossed module of Lie conformal algebras.
struct CrossedModuleData {
    std::string name;
    BracketTable g, h;
    ConfMap phi;           // h -> g, lambda-free
    ActionTable action;    // g acting on h
};

Report check_crossed_module(const CrossedModuleData& c);
CrossedModuleData to_crossed_module(const TwoTermData& t);
TwoTermData from_crossed_module(const CrossedModuleData& c);

// Skeletal constructions.
TwoTermData make_skeletal(const BracketTable& r, const ActionTable& act, const Cochain& c3);
TwoTermData make_string(const BracketTable& r, const FormTable& b);
TwoTermData algebra_as_twoterm(const BracketTable& r);

// Gauge twist of skeletal data by a skew f2; returns the twisted data and the
// morphism (id, id, f2) onto it.
std::pair<TwoTermData, MorphismData> twist_skeletal(
    const TwoTermData& t, const std::map<std::array<int, 2>, ModElem>& f2);

// Conformal Lie 2-algebra presentation (objects / morphisms / Jacobiator).
struct Lie2Presentation {
    CModPtr objects;       // V0
    CModPtr morph;         // V0 + V1
    int r0 = 0, r1 = 0;
    ConfMap src, tgt;      // morph -> objects
    ConfMap ident;         // objects -> morph
    BracketTable mor_bracket;
    std::map<std::array<int, 3>, ModElem> jacobiator;   // over morph
};

Lie2Presentation lie2_present(const TwoTermData& t);
TwoTermData lie2_extract(const Lie2Presentation& p);
// Source/target of J (condition (g)), naturality (condition (h)) and the
// P=Q coherence (condition (i)) checked through the presentation's tables.
Report check_presentation(const Lie2Presentation& p, const TwoTermData& t);

} // namespace conformal
