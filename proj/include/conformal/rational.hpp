#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace conformal {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". Throws on malformed input.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

} // namespace conformal
