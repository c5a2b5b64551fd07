#pragma once

#include <array>
#include <optional>
#include <vector>

#include "polydec/decompose.hpp"
#include "polydec/linear.hpp"
#include "polydec/poly.hpp"

namespace polydec {

enum class RittKind { TrivialLinear, ChebyshevType, ExponentialType };

// Analysis of a two-sided relation a∘b = c∘d.
//
// TrivialLinear: deg(a) = deg(c), d = link∘b and a = c∘link.
// ChebyshevType: after factoring out the common composition factors g_left /
//   h_right, the core is a T_n / T_m exchange. With a full rational witness,
//   linears = {LA, MA, LB, LC, MC, LD} and
//     a_hat = LA ∘ T_n ∘ MA        b_hat = MA^{-1} ∘ eps_b T_m ∘ LB
//     c_hat = LC ∘ T_m ∘ MC        d_hat = MC^{-1} ∘ eps_d T_n ∘ LD
// ExponentialType: the core is X^n ∘ X^s h(X^n) = X^s h(X)^n ∘ X^n; linears =
//   {l1, l2, l3, l4} with
//     a_hat = l1^{-1} ∘ X^n ∘ l2   b_hat = l2^{-1} ∘ X^s h(X^n) ∘ l4
//     c_hat = l1^{-1} ∘ X^s h(X)^n ∘ l3   d_hat = l3^{-1} ∘ X^n ∘ l4
// swapped records that (a,b) and (c,d) exchanged roles before the analysis.
struct Ritt2Classification {
    RittKind kind = RittKind::TrivialLinear;
    bool swapped = false;
    bool witness_supported = true;
    std::optional<Linear> link;
    int n = 0, m = 0, s = 0;
    Poly h;
    Poly g_left, h_right;
    Poly a_hat, b_hat, c_hat, d_hat;
    std::vector<Linear> linears;
    int eps_b = 1, eps_d = 1;
};

struct RittMove {
    Poly lhs, rhs;
    std::array<Poly, 4> quad;
};

// X^n ∘ X^s h(X^n) = X^s h(X)^n ∘ X^n
RittMove ritt_move_exponential(int n, int s, const Poly& h);

// T_n ∘ T_m = T_m ∘ T_n (= T_{nm})
std::pair<Poly, Poly> ritt_move_chebyshev(int n, int m);

// (eps^n T_m) ∘ T_n = T_n ∘ (eps T_m) for gcd(n, m) = 1, n > 2
std::array<Poly, 4> dihedral_move(int n, int m, int eps);

Ritt2Classification classify_ritt(const Poly& a, const Poly& b, const Poly& c, const Poly& d);

// The swapped-degree companion of an indecomposable pair, when one exists.
std::vector<std::pair<Poly, Poly>> ritt_neighbors_of_pair(const Poly& u, const Poly& v);

}  // namespace polydec
