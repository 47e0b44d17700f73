#include "conformal/expr.hpp"

#include "conformal/config.hpp"

#include <cctype>

namespace conformal {

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

struct Parser {
    Lexer lx;

    Poly parse() {
        Poly p = expr();
        if (!lx.done()) throw parse_error("unexpected trailing input", (int)lx.i);
        return p;
    }

    Poly expr() {
        Poly p = term();
        while (!lx.done()) {
            char c = lx.peek();
            if (c == '+') {
                ++lx.i;
                p += term();
            } else if (c == '-') {
                ++lx.i;
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (!lx.done()) {
            char c = lx.peek();
            if (c == '*') {
                ++lx.i;
                p = p * factor();
            } else if (c == '/') {
                ++lx.i;
                int at = (int)lx.i;
                Poly q = factor();
                if (!q.is_constant() || q.is_zero())
                    throw parse_error("divisor must be a nonzero constant", at);
                p = p.scaled(Rational(1 / q.constant_value()));
            } else {
                break;
            }
        }
        return p;
    }

    Poly factor() {
        char c = lx.peek();
        if (c == '-') {
            ++lx.i;
            return -factor();
        }
        if (c == '+') {
            ++lx.i;
            return factor();
        }
        Poly p = primary();
        if (lx.peek() == '^') {
            ++lx.i;
            int at = (int)lx.i;
            if (lx.peek() == '^') throw parse_error("malformed exponent", at);
            int e = integer();
            if (e > config().max_exponent)
                throw parse_error("exponent exceeds cap", at);
            p = p.pow(e);
        }
        if (lx.peek() == '^') throw parse_error("malformed exponent", (int)lx.i);
        return p;
    }

    Poly primary() {
        char c = lx.peek();
        int at = (int)lx.i;
        if (c == '(') {
            ++lx.i;
            Poly p = expr();
            if (lx.peek() != ')') throw parse_error("expected ')'", (int)lx.i);
            ++lx.i;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(rat(integer()));
        if (c == 'D') {
            ++lx.i;
            return Poly::partial();
        }
        if (c == 'L') {
            ++lx.i;
            if (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
                int k = integer();
                if (k < 1) throw parse_error("lambda index must be >= 1", at);
                return Poly::lambda(k);
            }
            return Poly::lambda(1);   // bare L is an alias for L1
        }
        throw parse_error(c == '\0' ? "unexpected end of expression"
                                    : std::string("unexpected character '") + c + "'",
                          at);
    }

    int integer() {
        lx.skip_ws();
        int at = (int)lx.i;
        if (lx.i >= lx.s.size() || !std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
            throw parse_error("expected an integer", at);
        long v = 0;
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
            v = v * 10 + (lx.s[lx.i] - '0');
            if (v > 1000000000L) throw parse_error("integer literal too large", at);
            ++lx.i;
        }
        return (int)v;
    }
};

} // namespace

Poly parse_poly(const std::string& text) {
    Parser p{Lexer{text}};
    return p.parse();
}

} // namespace conformal
