#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polydec/linear.hpp"
#include "polydec/poly.hpp"

namespace polydec {

// Finite branch-point data of f, read off the branch polynomial
// B(T) = Res_X(f - T, f').
struct RamProfile {
    int branch_count = 0;
    bool all_simple_ramification = false;
    // (rational branch point, multiplicity pattern of f - c), points ascending
    std::vector<std::pair<Rational, std::vector<int>>> rational_branch_data;
};

RamProfile ram_profile(const Poly& f);

enum class FormTag { None, Cyclic, Dihedral, TwistInner, TwistOuter };

// f = c (X - beta)^n + v
struct CyclicWitness {
    Rational beta, c, v;
};

// f = p T_n(alpha (X - beta)) + q with alpha^2 rational. Stored scale is p for
// even n and p*alpha for odd n, so every coefficient of f is a rational
// combination of the stored data even when alpha itself is irrational.
struct DihedralWitness {
    Rational beta, alpha_sq, scale, shift;
};

// l1 ∘ f ∘ l2 = X^s h(X^n)
struct TwistInnerWitness {
    Linear l1, l2;
    Poly h;
};

// f - c0 = scale (X - beta)^s H(X)^n with H(beta) != 0
struct TwistOuterWitness {
    Rational c0, beta, scale;
    Poly H;
};

struct FormReport {
    FormTag tag = FormTag::None;
    int n = 0;
    int s = 0;
    std::optional<CyclicWitness> cyclic;
    std::optional<DihedralWitness> dihedral;
    std::optional<TwistInnerWitness> twist_inner;
    std::optional<TwistOuterWitness> twist_outer;
};

FormReport detect_cyclic(const Poly& f);   // deg >= 2
FormReport detect_dihedral(const Poly& f); // deg >= 3

// |Gamma(f)|: order of the translation-free symmetry group. The normalized
// polynomial is monic and centered with zero constant term; a pure power means
// the group is infinite.
struct GammaResult {
    bool infinite = false;
    int order = 1;
    Poly normalized;
    Linear l1, l2;  // l1 ∘ f ∘ l2 = normalized
};

GammaResult gamma_symmetry_order(const Poly& f);

// gamma(f): number of complex linears l with f ∘ l = f.
int gamma0_isometry_order(const Poly& f);

FormReport detect_twist_inner(const Poly& f);
FormReport detect_twist_outer(const Poly& f, int n);

// f = residual^{mq} * prod (X - beta_i)^{m r_i q / q_i} with q = prod q_i
struct CanonicalTwistForm {
    int m = 1;
    struct Root {
        Rational beta;
        int q = 1;
        int r = 1;
    };
    std::vector<Root> q_list;
    Poly residual;

    Poly reconstruct() const;
};

// Throws std::invalid_argument on cyclic/dihedral/linear input and
// std::runtime_error when a required witness is irrational.
CanonicalTwistForm canonical_twist_form(const Poly& f);

// When f ∘ g lies in Q[X^n]: f = f_hat(X^{n/gcd(n,s)}) ∘ l^{-1} and
// g = l ∘ X^s g_hat(X^n).
struct EvenPartSplit {
    Poly f_hat, g_hat;
    Linear l;
    int s = 0;
};

std::optional<EvenPartSplit> even_part_split(const Poly& f, const Poly& g, int n);

// Rebuilds p T_n(alpha(X - beta)) + q from a dihedral witness using rational
// arithmetic only.
Poly dihedral_witness_poly(const DihedralWitness& w, int n);

}  // namespace polydec
