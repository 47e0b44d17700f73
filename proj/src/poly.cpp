#include "conformal/poly.hpp"

#include "conformal/config.hpp"

#include <algorithm>
#include <sstream>

namespace conformal {

Config& config() {
    static Config cfg;
    return cfg;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string Var::name() const {
    if (is_partial()) return "D";
    return "L" + std::to_string(id_);
}

Monomial::Monomial(Var v, int e) {
    if (e < 0) throw poly_error("negative exponent");
    if (e > 0) exps_.push_back({v, e});
}

int Monomial::exponent(Var v) const {
    for (const auto& [w, e] : exps_)
        if (w == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [w, e] : exps_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    const int cap = config().max_exponent;
    auto ia = exps_.begin(), ib = o.exps_.begin();
    while (ia != exps_.end() || ib != o.exps_.end()) {
        if (ib == o.exps_.end() || (ia != exps_.end() && ia->first < ib->first)) {
            r.exps_.push_back(*ia++);
        } else if (ia == exps_.end() || ib->first < ia->first) {
            r.exps_.push_back(*ib++);
        } else {
            int e = ia->first == ib->first ? ia->second + ib->second : 0;
            if (e > cap)
                throw poly_error("exponent cap exceeded (" + std::to_string(e) +
                                 " > " + std::to_string(cap) + "), runaway expansion?");
            r.exps_.push_back({ia->first, e});
            ++ia, ++ib;
        }
    }
    return r;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (const auto& p : exps_)
        if (!(p.first == v)) r.exps_.push_back(p);
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Lexicographic tie-break: earlier variable with larger exponent is larger.
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first != ib->first)
            // The side owning the earlier variable has positive exponent there.
            return ib->first < ia->first;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia, ++ib;
    }
    return ia == a.exps_.end() && ib != b.exps_.end();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    p.add_term(Monomial(), c);
    return p;
}

Poly Poly::variable(Var v) {
    Poly p;
    p.add_term(Monomial(v), rat(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return rat(0);
    if (!is_constant()) throw poly_error("not a constant polynomial");
    return terms_.begin()->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, Rational(-c));
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma.times(mb), Rational(ca * cb));
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, Rational(k * c));
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw poly_error("negative power");
    Poly r = constant(rat(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

bool Poly::contains(Var v) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) > 0) return true;
    return false;
}

int Poly::degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

int Poly::max_lambda_index() const {
    int k = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [w, e] : m.factors())
            if (!w.is_partial()) k = std::max(k, w.lambda_index());
    return k;
}

Poly Poly::substitute(Var v, const Poly& q) const {
    // Cache powers of q up to the maximal exponent of v.
    int dmax = degree_in(v);
    if (dmax == 0) return *this;
    std::vector<Poly> qpow(dmax + 1);
    qpow[0] = constant(rat(1));
    for (int i = 1; i <= dmax; ++i) qpow[i] = qpow[i - 1] * q;

    Poly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        Poly base;
        base.add_term(m.without(v), c);
        r += e == 0 ? base : base * qpow[e];
    }
    return r;
}

Poly Poly::substitute_all(const std::vector<std::pair<Var, Poly>>& subs) const {
    // Two-phase rename through fresh temporaries so targets never capture.
    int fresh = max_lambda_index();
    for (const auto& [v, q] : subs) fresh = std::max(fresh, q.max_lambda_index());
    Poly r = *this;
    std::vector<Var> temps;
    for (const auto& [v, q] : subs) {
        Var t = Var::lambda(++fresh);
        temps.push_back(t);
        r = r.substitute(v, variable(t));
    }
    for (size_t i = 0; i < subs.size(); ++i) r = r.substitute(temps[i], subs[i].second);
    return r;
}

Poly Poly::coeff_of(Var v, int d) const {
    if (d < 0) throw poly_error("negative coefficient degree");
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) == d) r.add_term(m.without(v), c);
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        const Monomial& m = it->first;
        if (m.empty()) {
            out << to_string(c);
        } else {
            bool printed = false;
            if (c != 1) {
                out << to_string(c);
                printed = true;
            }
            for (const auto& [w, e] : m.factors()) {
                if (printed) out << "*";
                out << w.name();
                if (e > 1) out << "^" << e;
                printed = true;
            }
        }
        first = false;
    }
    return out.str();
}

int max_lambda_index(const std::vector<const Poly*>& ps) {
    int k = 0;
    for (const Poly* p : ps) k = std::max(k, p->max_lambda_index());
    return k;
}

} // namespace conformal
