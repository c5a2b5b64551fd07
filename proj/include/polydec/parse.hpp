#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "polydec/poly.hpp"

namespace polydec {

struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

// Grammar, loosest to tightest: '+'/'-' < '*' < 'o' < '^'. Composition 'o' is
// right-associative and must be surrounded by whitespace. Atoms are rationals
// ("p/q" or integers), 'X', 'T(n)', and parenthesized expressions; a leading
// sign is allowed. Evaluates directly to the polynomial.
Poly parse_poly(const std::string& text);

}  // namespace polydec
