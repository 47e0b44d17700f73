#pragma once

#include "conformal/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace conformal {

struct engine_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Free finitely generated C[D]-module. `pz[i]` marks basis elements on which
// D acts as zero (the trivial coefficient module C of the string
// construction); direct sums may mix flagged and unflagged generators.
struct FreeCMod {
    std::string name;
    std::vector<std::string> basis;
    std::vector<bool> pz;

    int rank() const { return (int)basis.size(); }
    int index_of(const std::string& b) const;
    bool partial_zero_at(int i) const { return pz.empty() ? false : pz[i]; }
    bool any_partial_zero() const;
};

using CModPtr = std::shared_ptr<const FreeCMod>;

CModPtr make_module(std::string name, std::vector<std::string> basis,
                    bool partial_zero = false);
CModPtr make_module_mixed(std::string name, std::vector<std::string> basis,
                          std::vector<bool> pz);

// Element of M[L1,...,Lk]: one Poly per basis element.
class ModElem {
public:
    ModElem() = default;
    explicit ModElem(CModPtr m) : module_(std::move(m)), comps_(module_->rank()) {}
    ModElem(CModPtr m, std::vector<Poly> comps);

    static ModElem generator(const CModPtr& m, int i);

    const CModPtr& module() const { return module_; }
    const std::vector<Poly>& comps() const { return comps_; }
    const Poly& comp(int i) const { return comps_[i]; }
    void set_comp(int i, Poly p);

    bool is_zero() const;
    bool contains(Var v) const;
    int max_lambda_index() const;

    ModElem operator-() const;
    ModElem& operator+=(const ModElem& o);
    ModElem& operator-=(const ModElem& o);
    friend ModElem operator+(ModElem a, const ModElem& b) { return a += b; }
    friend ModElem operator-(ModElem a, const ModElem& b) { return a -= b; }
    friend ModElem operator*(const Poly& p, const ModElem& m);
    ModElem scaled(const Rational& c) const;

    ModElem substitute(Var v, const Poly& q) const;
    ModElem substitute_all(const std::vector<std::pair<Var, Poly>>& subs) const;

    friend bool operator==(const ModElem& a, const ModElem& b);
    friend bool operator!=(const ModElem& a, const ModElem& b) { return !(a == b); }

    std::string str() const;

private:
    void canonicalize();
    CModPtr module_;
    std::vector<Poly> comps_;
};

void require_same_module(const ModElem& a, const ModElem& b, const char* where);

// Conformal linear map stored by its generator matrix. Entry mat[k][i] is the
// e_k-coefficient of f_lam(e_i), a Poly in the evaluation variable and D.
// eval_index names which lambda is the evaluation variable; smaller indices
// are passive parameters (bracket families).
struct ConfMap {
    CModPtr source, target;
    int eval_index = 1;
    std::vector<std::vector<Poly>> mat;

    static ConfMap zero(CModPtr src, CModPtr tgt);
    static ConfMap identity(const CModPtr& m);

    bool is_zero() const;
    friend bool operator==(const ConfMap& a, const ConfMap& b);
};

// f_lam(m): shifts D -> D+lam in m's components, then multiplies by the
// matrix at evaluation variable lam. Errors if lam occurs in m.
ModElem chom_apply(const ConfMap& f, Var lam, const ModElem& m);

// Plain application of a D-equivariant (lambda-free) map.
ModElem dmap_apply(const ConfMap& f, const ModElem& m);

bool is_partial_equivariant(const ConfMap& f);

// Categorical composition (apply g, then f). For lambda-dependent matrices
// this is the formal same-variable extension; on D-equivariant maps it is the
// genuine composite.
ConfMap cend_compose(const ConfMap& f, const ConfMap& g);

// The lambda-product family (f_p g)_e = f_p(g_{e-p}(.)) materialized with
// product variable `prod` and evaluation variable `eval`.
ConfMap cend_lambda_product(const ConfMap& f, const ConfMap& g, Var prod, Var eval);

// [f_L1 g] as a family: passive parameter L1, evaluation variable L2.
ConfMap cend_bracket(const ConfMap& f, const ConfMap& g);
// Same bracket computed through the g_{-D-lam} f display (coefficient
// extraction plus the Chom D-action) rather than index substitution.
ConfMap cend_bracket_partial_form(const ConfMap& f, const ConfMap& g);

// Conformal bilinear form <e_i, e_j>_L1 = entries[i][j], values in C[L1].
struct FormTable {
    std::string name;
    CModPtr module;
    std::vector<std::vector<Poly>> entries;

    static FormTable zero(CModPtr m);
};

// <u, w>_lam = sum f_i(-lam) g_j(lam) B_ij(lam).
Poly form_eval(const FormTable& b, const ModElem& u, const ModElem& w, Var lam);

// Expresses target = sum_k c_k * columns[k] with coefficient polynomials c_k
// in (D, lambdas of target), columns lambda-free, D-degree of c_k bounded.
// Returns nullopt when no exact representation exists.
std::optional<std::vector<Poly>> express_in_span(const ModElem& target,
                                                 const std::vector<ModElem>& columns,
                                                 int partial_degree_bound = -1);

} // namespace conformal
