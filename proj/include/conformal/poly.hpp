#pragma once

#include "conformal/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conformal {

struct poly_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A formal variable: the distinguished symbol D (= partial) or one of the
// indexed family L1, L2, L3, ...
class Var {
public:
    static Var partial() { return Var(0); }
    static Var lambda(int i) {
        if (i < 1) throw poly_error("lambda index must be >= 1");
        return Var(i);
    }

    bool is_partial() const { return id_ == 0; }
    int lambda_index() const { return id_; }
    std::string name() const;

    friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
    friend bool operator!=(Var a, Var b) { return a.id_ != b.id_; }
    friend bool operator<(Var a, Var b) { return a.id_ < b.id_; }

private:
    explicit Var(int id) : id_(id) {}
    int id_;
};

// Sparse monomial: sorted (Var, exponent) pairs, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Var v, int e = 1);

    int exponent(Var v) const;
    int total_degree() const;
    bool empty() const { return exps_.empty(); }
    const std::vector<std::pair<Var, int>>& factors() const { return exps_; }

    Monomial times(const Monomial& o) const;   // checks the exponent cap
    Monomial without(Var v) const;

    // Graded order: total degree first, then lexicographic on exponents.
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<std::pair<Var, int>> exps_;
};

// Exact multivariate polynomial over Q in D and the lambda family.
// Canonical form: no zero coefficients stored.
class Poly {
public:
    Poly() = default;
    Poly(long n) { *this = constant(rat(n)); }
    explicit Poly(const Rational& c) { *this = constant(c); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c);
    static Poly variable(Var v);
    static Poly partial() { return variable(Var::partial()); }
    static Poly lambda(int i) { return variable(Var::lambda(i)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;   // requires is_constant()

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    bool contains(Var v) const;
    int degree_in(Var v) const;
    int max_lambda_index() const;  // 0 if none

    // Replaces every occurrence of v by q (plain commutative substitution).
    Poly substitute(Var v, const Poly& q) const;
    // Simultaneous substitution of several variables.
    Poly substitute_all(const std::vector<std::pair<Var, Poly>>& subs) const;
    // q with p = sum_d q_d v^d; the result does not contain v.
    Poly coeff_of(Var v, int d) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

// Fresh lambda index strictly above anything used in the given polys.
int max_lambda_index(const std::vector<const Poly*>& ps);

} // namespace conformal
