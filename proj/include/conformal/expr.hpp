#pragma once

#include "conformal/poly.hpp"

#include <string>

namespace conformal {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, int pos)
        : std::runtime_error(msg + " (at column " + std::to_string(pos + 1) + ")"),
          position(pos) {}
    int position;
};

// Parses the expression grammar: variables D, L1, L2, ... (L aliases L1),
// integer and p/q literals, operators + - * / ^ and parentheses.
// Division requires a nonzero constant divisor.
Poly parse_poly(const std::string& text);

} // namespace conformal
