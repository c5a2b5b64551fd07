#pragma once

#include <optional>
#include <utility>

#include "polydec/poly.hpp"

namespace polydec {

// pairwise-coprime squarefree bases with multiplicities:
// input = unit * prod base_i^multiplicity_i
struct SquarefreePart {
    Rational unit{1};
    std::vector<std::pair<Poly, int>> factors;

    Poly reconstruct() const;
};

// quotient/remainder with deg(rem) < deg(g)
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

// exact division; throws if the remainder is nonzero
Poly exact_div(const Poly& f, const Poly& g);

// monic gcd; rejects (0, 0)
Poly poly_gcd(const Poly& f, const Poly& g);

// Yun's algorithm; rejects constants
SquarefreePart squarefree_decomposition(const Poly& f);

bool is_squarefree(const Poly& f);

// product of the distinct irreducible factors, monic
Poly squarefree_part(const Poly& f);

// Res_X(f, g) for nonzero f, g
Rational resultant(const Poly& f, const Poly& g);

// B(T) = Res_X(f(X) - T, f'(X)); vanishes exactly at finite branch points.
// Computed by evaluation at deg(f) points and Lagrange interpolation.
Poly resultant_in_t(const Poly& f);

// digits c_0..c_k with deg(c_i) < deg(g) and f = sum c_i g^i
std::vector<Poly> radix_expand(const Poly& f, const Poly& g);

// all rational roots, sorted ascending, without multiplicity
std::vector<Rational> rational_roots(const Poly& f);

// exact rational e-th root when it exists
std::optional<Rational> rational_root_of(const Rational& x, unsigned e);

// monic-poly e-th root when it exists (h^e = f, h monic)
std::optional<Poly> poly_nth_root(const Poly& f, unsigned e);

}  // namespace polydec
