#pragma once

#include "conformal/cmod.hpp"
#include "conformal/report.hpp"

#include <array>
#include <set>

namespace conformal {

enum class AxiomKind {
    SesquiConsistent,
    Skew,
    Jacobi,
    JacobiEquiv,
    LeftLeibniz,
    RightLeibniz,
};

std::string axiom_name(AxiomKind k);

// Structure polynomials of a lambda-product: entries[i][j] = [e_i L1 e_j],
// a ModElem over `module` with Poly components in (L1, D).
struct BracketTable {
    std::string name;
    CModPtr module;
    std::vector<std::vector<ModElem>> entries;
    enum class SymClaim { None, Skew } claim = SymClaim::None;

    static BracketTable zero(CModPtr m, std::string name = "");
    const ModElem& entry(int i, int j) const { return entries[i][j]; }
};

bool tables_equal(const BracketTable& a, const BracketTable& b);

// [a_nu b] by conformal sesquilinearity: left argument D -> -nu, right
// argument D -> D+nu, table entry at L1 -> nu. nu must be fresh in a and b.
ModElem eval_bracket(const BracketTable& t, const ModElem& a, Var nu, const ModElem& b);
// Evaluation at a composite index: fresh variable then substitution.
ModElem eval_bracket_at(const BracketTable& t, const ModElem& a, const Poly& nu_expr,
                        const ModElem& b);

enum class Side { Left, Right };

// Action structure polynomials: entries[i][j] over `module`;
// Left: a_i |>_{L1} e_j. Right: e_j <|_{L1} a_i.
struct ActionTable {
    std::string name;
    BracketTable algebra;
    CModPtr module;
    Side side = Side::Left;
    std::vector<std::vector<ModElem>> entries;

    static ActionTable zero(const BracketTable& alg, CModPtr m, Side side);
    const ModElem& entry(int i, int j) const { return entries[i][j]; }
};

ModElem eval_action_left(const ActionTable& a, const ModElem& x, Var nu, const ModElem& m);
ModElem eval_action_left_at(const ActionTable& a, const ModElem& x, const Poly& nu_expr,
                            const ModElem& m);
ModElem eval_action_right(const ActionTable& a, const ModElem& m, Var nu, const ModElem& x);
ModElem eval_action_right_at(const ActionTable& a, const ModElem& m, const Poly& nu_expr,
                             const ModElem& x);

// a |>_lam v := -(v <|_mu a)|_{mu -> -D-lam} and its inverse; the same
// substitution implements both directions.
ActionTable right_to_left(const ActionTable& a);
ActionTable left_to_right(const ActionTable& a);

Report check_axioms(const BracketTable& t, const std::set<AxiomKind>& kinds);
Report check_module_axioms(const ActionTable& act);
Report check_leibniz_module(const ActionTable& lact, const ActionTable& ract);

// Conformal derivation test: D_{L1}[x_{L2} y] = [(D_{L1}x)_{L1+L2} y] + [x_{L2} D_{L1}y].
// Works for bracket families: the map's eval variable and the bracket variable
// are chosen above any passive parameters.
Report check_derivation(const BracketTable& a, const ConfMap& d);

ConfMap inner_derivation(const BracketTable& a, const ModElem& x);

// Normalizer condition [D_{L1} ad_om(x)] = ad_om(D_{L1} x) on generators.
Report check_normalizer(const BracketTable& a, const BracketTable& om, const ConfMap& d);

// Symmetry / invariance of a conformal bilinear form; invariance checked
// against `alg` when given.
Report check_form(const FormTable& b, const BracketTable* alg);

// Built-in algebras.
BracketTable builtin_virasoro();
BracketTable builtin_free_abelian(int n);
// Current algebra over structure constants c[i][j][k] (= coefficient of e_k in
// [x_i, x_j]); validates antisymmetry and the classical Jacobi identity.
BracketTable builtin_current(const std::string& name, const std::vector<std::string>& basis,
                             const std::vector<std::vector<std::vector<Rational>>>& c);
BracketTable builtin_cur_sl2();

std::string witness_str(const CModPtr& m, const std::vector<int>& tuple, const ModElem& residual);

} // namespace conformal
