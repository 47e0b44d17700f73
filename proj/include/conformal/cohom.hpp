#pragma once

#include "conformal/calg.hpp"

#include <map>
#include <optional>

namespace conformal {

// n-cochain of a Lie conformal algebra with coefficients in a module.
// Values are stored on ordered generator tuples; components are Polys in
// (L1..L_{n-1}, D). Evaluation on general arguments goes through
// cochain_eval, which implements conformal linearity with the implicit last
// index (the n-th argument's partial shifts by the sum of the explicit slots).
struct Cochain {
    std::string name;
    int degree = 0;
    BracketTable algebra;
    ActionTable left;                     // Side::Left over the coefficient module
    std::optional<ActionTable> right;     // Side::Right, for the second formula
    std::map<std::vector<int>, ModElem> values;

    ModElem value_at(const std::vector<int>& tuple) const;
    static Cochain zero(int degree, const BracketTable& alg, const ActionTable& left);
};

// slots.size() == degree-1 (empty for degrees 0 and 1). Arguments may carry
// D- and foreign-lambda coefficients.
ModElem cochain_eval(const Cochain& g, const std::vector<ModElem>& args,
                     const std::vector<Poly>& slots);

enum class DeltaFormula { Lie, Leibniz };

// The differential. Leibniz requires a right action: the stored one, or the
// one induced from the left action via v <|_lam x := -x |>_{-D-lam} v.
Cochain apply_delta(const Cochain& g, DeltaFormula f);

Report check_delta_squared(const Cochain& g, DeltaFormula f);
Report is_cocycle(const Cochain& g, DeltaFormula f);

ActionTable induce_right_action(const ActionTable& left);

} // namespace conformal
