#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polydec/linear.hpp"
#include "polydec/poly.hpp"

namespace polydec {

// Chain of composition factors, each monic with zero constant term and degree
// >= 2; all affine slack lives in the leading linear. With that normalization,
// equivalence of decompositions is literal equality.
struct Decomposition {
    Linear leading;
    std::vector<Poly> factors;

    Poly recompose() const;
    std::vector<int> degree_sequence() const;

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.leading == b.leading && a.factors == b.factors;
    }
    friend bool operator!=(const Decomposition& a, const Decomposition& b) { return !(a == b); }
};

// Absorb per-factor affine parts leftward into a single leading linear.
Decomposition canonicalize(Linear leading, std::vector<Poly> factors);

// If f = a∘g with deg(g) = d, returns (a, g) with g monic and g(0) = 0 (the
// unique such pair). d must be a proper divisor of deg(f).
std::optional<std::pair<Poly, Poly>> right_factor(const Poly& f, int d);

bool is_indecomposable(const Poly& f);

// Greedy complete decomposition: repeatedly strip the smallest-degree right
// factor. Every factor of the result is indecomposable.
Decomposition complete_decomposition(const Poly& f);

// â with c∘â = f, when it exists. deg(c) must divide deg(f).
std::optional<Poly> left_divide(const Poly& f, const Poly& c);

// Solves c∘ℓ = target for a rational linear ℓ (deg c = deg target required).
std::optional<Linear> solve_inner_linear(const Poly& c, const Poly& target);

// Solves ℓ∘c = target.
std::optional<Linear> solve_outer_linear(const Poly& c, const Poly& target);

// Linears with l1∘v∘l2 = u, if u and v are equivalent over the rationals.
std::optional<std::pair<Linear, Linear>> find_equivalence(const Poly& u, const Poly& v);

// Common-factor refinement of a∘b = c∘d:
//   a = g∘â, c = g∘ĉ, b = b̂∘h, d = d̂∘h, â∘b̂ = ĉ∘d̂,
//   deg(g) = gcd(deg a, deg c), deg(h) = gcd(deg b, deg d).
struct GcdSplit {
    Poly g, a_hat, c_hat, b_hat, d_hat, h;
};
GcdSplit gcd_split(const Poly& a, const Poly& b, const Poly& c, const Poly& d);

bool equivalent_decompositions(const Decomposition& u, const Decomposition& v);

std::vector<int> proper_divisors(int n);  // divisors d with 1 < d < n, ascending

}  // namespace polydec
