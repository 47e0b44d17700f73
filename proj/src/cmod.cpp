#include "conformal/cmod.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace conformal {

int FreeCMod::index_of(const std::string& b) const {
    for (int i = 0; i < rank(); ++i)
        if (basis[i] == b) return i;
    return -1;
}

bool FreeCMod::any_partial_zero() const {
    for (bool b : pz)
        if (b) return true;
    return false;
}

CModPtr make_module(std::string name, std::vector<std::string> basis, bool partial_zero) {
    std::vector<bool> pz(basis.size(), partial_zero);
    return make_module_mixed(std::move(name), std::move(basis), std::move(pz));
}

CModPtr make_module_mixed(std::string name, std::vector<std::string> basis,
                          std::vector<bool> pz) {
    std::set<std::string> seen(basis.begin(), basis.end());
    if (seen.size() != basis.size())
        throw engine_error("module " + name + ": duplicate basis names");
    if (pz.size() != basis.size())
        throw engine_error("module " + name + ": flag vector size mismatch");
    auto m = std::make_shared<FreeCMod>();
    m->name = std::move(name);
    m->basis = std::move(basis);
    m->pz = std::move(pz);
    return m;
}

ModElem::ModElem(CModPtr m, std::vector<Poly> comps)
    : module_(std::move(m)), comps_(std::move(comps)) {
    if ((int)comps_.size() != module_->rank())
        throw engine_error("component count does not match module rank");
    canonicalize();
}

ModElem ModElem::generator(const CModPtr& m, int i) {
    ModElem e(m);
    if (i < 0 || i >= m->rank()) throw engine_error("generator index out of range");
    e.comps_[i] = Poly::constant(rat(1));
    return e;
}

void ModElem::set_comp(int i, Poly p) {
    comps_.at(i) = std::move(p);
    canonicalize();
}

void ModElem::canonicalize() {
    if (!module_ || !module_->any_partial_zero()) return;
    for (int i = 0; i < (int)comps_.size(); ++i)
        if (module_->partial_zero_at(i) && comps_[i].contains(Var::partial()))
            comps_[i] = comps_[i].substitute(Var::partial(), Poly::zero());
}

bool ModElem::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

bool ModElem::contains(Var v) const {
    for (const auto& c : comps_)
        if (c.contains(v)) return true;
    return false;
}

int ModElem::max_lambda_index() const {
    int k = 0;
    for (const auto& c : comps_) k = std::max(k, c.max_lambda_index());
    return k;
}

ModElem ModElem::operator-() const {
    ModElem r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
}

void require_same_module(const ModElem& a, const ModElem& b, const char* where) {
    if (a.module() != b.module())
        throw engine_error(std::string(where) + ": elements of different modules");
}

ModElem& ModElem::operator+=(const ModElem& o) {
    require_same_module(*this, o, "add");
    for (int i = 0; i < (int)comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

ModElem& ModElem::operator-=(const ModElem& o) {
    require_same_module(*this, o, "sub");
    for (int i = 0; i < (int)comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

ModElem operator*(const Poly& p, const ModElem& m) {
    ModElem r = m;
    for (auto& c : r.comps_) c = p * c;
    r.canonicalize();
    return r;
}

ModElem ModElem::scaled(const Rational& c) const {
    ModElem r = *this;
    for (auto& x : r.comps_) x = x.scaled(c);
    return r;
}

ModElem ModElem::substitute(Var v, const Poly& q) const {
    ModElem r = *this;
    for (auto& c : r.comps_) c = c.substitute(v, q);
    r.canonicalize();
    return r;
}

ModElem ModElem::substitute_all(const std::vector<std::pair<Var, Poly>>& subs) const {
    ModElem r = *this;
    for (auto& c : r.comps_) c = c.substitute_all(subs);
    r.canonicalize();
    return r;
}

bool operator==(const ModElem& a, const ModElem& b) {
    return a.module_ == b.module_ && a.comps_ == b.comps_;
}

std::string ModElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < (int)comps_.size(); ++i) {
        if (comps_[i].is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << comps_[i].str() << ")*" << module_->basis[i];
        first = false;
    }
    return out.str();
}

ConfMap ConfMap::zero(CModPtr src, CModPtr tgt) {
    ConfMap f;
    f.source = std::move(src);
    f.target = std::move(tgt);
    f.mat.assign(f.target->rank(), std::vector<Poly>(f.source->rank()));
    return f;
}

ConfMap ConfMap::identity(const CModPtr& m) {
    ConfMap f = zero(m, m);
    for (int i = 0; i < m->rank(); ++i) f.mat[i][i] = Poly::constant(rat(1));
    return f;
}

bool ConfMap::is_zero() const {
    for (const auto& row : mat)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

bool operator==(const ConfMap& a, const ConfMap& b) {
    return a.source == b.source && a.target == b.target &&
           a.eval_index == b.eval_index && a.mat == b.mat;
}

ModElem chom_apply(const ConfMap& f, Var lam, const ModElem& m) {
    if (m.module() != f.source) throw engine_error("chom_apply: module mismatch");
    if (lam.is_partial()) throw engine_error("chom_apply: evaluation variable must be a lambda");
    if (m.contains(lam))
        throw engine_error("chom_apply: evaluation variable already occurs in the argument");
    Var ev = Var::lambda(f.eval_index);
    ModElem out(f.target);
    Poly shift = Poly::partial() + Poly::variable(lam);
    for (int k = 0; k < f.target->rank(); ++k) {
        Poly acc;
        for (int i = 0; i < f.source->rank(); ++i) {
            if (m.comp(i).is_zero() || f.mat[k][i].is_zero()) continue;
            // Passive parameters with index below eval_index must not collide.
            if (lam != ev && f.mat[k][i].contains(lam))
                throw engine_error("chom_apply: evaluation variable collides with a passive parameter");
            Poly g = m.comp(i).substitute(Var::partial(), shift);
            Poly q = f.mat[k][i].substitute(ev, Poly::variable(lam));
            acc += g * q;
        }
        out.set_comp(k, std::move(acc));
    }
    return out;
}

ModElem dmap_apply(const ConfMap& f, const ModElem& m) {
    if (m.module() != f.source) throw engine_error("dmap_apply: module mismatch");
    if (!is_partial_equivariant(f))
        throw engine_error("dmap_apply: map is not lambda-free");
    ModElem out(f.target);
    for (int k = 0; k < f.target->rank(); ++k) {
        Poly acc;
        for (int i = 0; i < f.source->rank(); ++i)
            acc += m.comp(i) * f.mat[k][i];
        out.set_comp(k, std::move(acc));
    }
    return out;
}

bool is_partial_equivariant(const ConfMap& f) {
    for (const auto& row : f.mat)
        for (const auto& p : row)
            if (p.max_lambda_index() != 0) return false;
    return true;
}

ConfMap cend_compose(const ConfMap& f, const ConfMap& g) {
    if (g.target != f.source) throw engine_error("cend_compose: shape mismatch");
    if (f.eval_index != g.eval_index)
        throw engine_error("cend_compose: mixed evaluation variables");
    ConfMap h = ConfMap::zero(g.source, f.target);
    h.eval_index = f.eval_index;
    for (int k = 0; k < f.target->rank(); ++k)
        for (int i = 0; i < g.source->rank(); ++i) {
            Poly acc;
            for (int j = 0; j < f.source->rank(); ++j) acc += f.mat[k][j] * g.mat[j][i];
            h.mat[k][i] = std::move(acc);
        }
    return h;
}

ConfMap cend_lambda_product(const ConfMap& f, const ConfMap& g, Var prod, Var eval) {
    if (g.target != f.source) throw engine_error("cend_lambda_product: shape mismatch");
    if (prod == eval) throw engine_error("cend_lambda_product: variables must differ");
    ConfMap h = ConfMap::zero(g.source, f.target);
    if (eval.is_partial() || prod.is_partial())
        throw engine_error("cend_lambda_product: variables must be lambdas");
    h.eval_index = eval.lambda_index();
    Var fe = Var::lambda(f.eval_index);
    Var ge = Var::lambda(g.eval_index);
    Poly inner = Poly::variable(eval) - Poly::variable(prod);   // g at eval - prod
    Poly shift = Poly::partial() + Poly::variable(prod);        // f shifts g's output
    for (int k = 0; k < f.target->rank(); ++k)
        for (int i = 0; i < g.source->rank(); ++i) {
            Poly acc;
            for (int j = 0; j < f.source->rank(); ++j) {
                if (f.mat[k][j].is_zero() || g.mat[j][i].is_zero()) continue;
                Poly gq = g.mat[j][i].substitute(ge, inner).substitute(Var::partial(), shift);
                Poly fq = f.mat[k][j].substitute(fe, Poly::variable(prod));
                acc += gq * fq;
            }
            h.mat[k][i] = std::move(acc);
        }
    return h;
}

ConfMap cend_bracket(const ConfMap& f, const ConfMap& g) {
    if (f.source != f.target || g.source != g.target || f.source != g.source)
        throw engine_error("cend_bracket: endomorphisms of one module required");
    Var l1 = Var::lambda(1), l2 = Var::lambda(2);
    ConfMap t1 = cend_lambda_product(f, g, l1, l2);
    // g_{mu-lam} f_lam: family (g_p f)_e at p = L2 - L1, e = L2.
    int fresh = 3;
    for (const auto& row : f.mat)
        for (const auto& p : row) fresh = std::max(fresh, p.max_lambda_index() + 1);
    for (const auto& row : g.mat)
        for (const auto& p : row) fresh = std::max(fresh, p.max_lambda_index() + 1);
    Var p = Var::lambda(fresh);
    ConfMap t2 = cend_lambda_product(g, f, p, l2);
    Poly target = Poly::variable(l2) - Poly::variable(l1);
    ConfMap h = t1;
    for (int k = 0; k < (int)h.mat.size(); ++k)
        for (int i = 0; i < (int)h.mat[k].size(); ++i)
            h.mat[k][i] -= t2.mat[k][i].substitute(p, target);
    return h;
}

ConfMap cend_bracket_partial_form(const ConfMap& f, const ConfMap& g) {
    if (f.source != f.target || g.source != g.target || f.source != g.source)
        throw engine_error("cend_bracket: endomorphisms of one module required");
    Var l1 = Var::lambda(1), l2 = Var::lambda(2);
    ConfMap t1 = cend_lambda_product(f, g, l1, l2);
    // g_{-D-lam} f: expand the family (g_p f)_{l2} in powers of p, then let
    // D act through the Chom module structure, (D h)_{l2} = -l2 h_{l2}.
    int fresh = 3;
    for (const auto& row : f.mat)
        for (const auto& p : row) fresh = std::max(fresh, p.max_lambda_index() + 1);
    for (const auto& row : g.mat)
        for (const auto& p : row) fresh = std::max(fresh, p.max_lambda_index() + 1);
    Var p = Var::lambda(fresh);
    ConfMap fam = cend_lambda_product(g, f, p, l2);
    ConfMap h = t1;
    Poly chom_partial = -Poly::variable(l2);   // D acting on Chom at evaluation L2
    Poly arg = -chom_partial - Poly::variable(l1);   // -D-L1 with D materialized
    for (int k = 0; k < (int)h.mat.size(); ++k)
        for (int i = 0; i < (int)h.mat[k].size(); ++i) {
            const Poly& fp = fam.mat[k][i];
            int dmax = fp.degree_in(p);
            Poly acc;
            for (int d = 0; d <= dmax; ++d)
                acc += fp.coeff_of(p, d) * arg.pow(d);
            h.mat[k][i] -= acc;
        }
    return h;
}

FormTable FormTable::zero(CModPtr m) {
    FormTable b;
    b.module = std::move(m);
    b.entries.assign(b.module->rank(), std::vector<Poly>(b.module->rank()));
    return b;
}

Poly form_eval(const FormTable& b, const ModElem& u, const ModElem& w, Var lam) {
    if (u.module() != b.module || w.module() != b.module)
        throw engine_error("form_eval: module mismatch");
    if (lam.is_partial()) throw engine_error("form_eval: evaluation variable must be a lambda");
    Var l1 = Var::lambda(1);
    Poly mlam = -Poly::variable(lam);
    Poly plam = Poly::variable(lam);
    Poly acc;
    for (int i = 0; i < b.module->rank(); ++i) {
        if (u.comp(i).is_zero()) continue;
        Poly fi = u.comp(i).substitute(Var::partial(), mlam);
        for (int j = 0; j < b.module->rank(); ++j) {
            if (w.comp(j).is_zero() || b.entries[i][j].is_zero()) continue;
            Poly gj = w.comp(j).substitute(Var::partial(), plam);
            acc += fi * gj * b.entries[i][j].substitute(l1, plam);
        }
    }
    return acc;
}

} // namespace conformal
