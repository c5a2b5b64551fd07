#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polydec/poly.hpp"

namespace polydec {

// a = f^(i)∘â, b = b̂∘f^(j), â∘b̂ = f^(k), and deg(f) divides neither
// deg(â) nor deg(b̂).
struct IterateSplit {
    Poly a, b, a_hat, b_hat;
    int i = 0, j = 0, k = 0;
};

// Canonical two-factor splits of f^(e), one per divisor of deg(f)^e where a
// right factor exists; includes the trivial splits at both ends. Throws
// std::length_error when deg(f)^e + 1 exceeds coeff_cap.
std::vector<std::pair<Poly, Poly>> split_iterate(const Poly& f, int e, int coeff_cap = 4096);

// Peels maximal iterate powers off both sides of a split of f^(e).
IterateSplit reduce_split(const Poly& f, const Poly& a, const Poly& b, int e);

// f = l ∘ X^n ∘ l^{-1} for some complex linear l
bool is_conjugate_power(const Poly& f);
// f = l ∘ (±T_n) ∘ l^{-1} for some complex linear l
bool is_conjugate_chebyshev(const Poly& f);

// u is equivalent to X^s h(X^n) or X^s h(X)^n with gcd(s, n) = 1, n > 1,
// i.e. u can occur in an exponential exchange (within rational-witness scope).
bool in_exchange_family(const Poly& u);

// Sweep over every split of f^(1..e): the reduced k must satisfy
// 2^k <= deg(f) + 2, and 2^k <= deg(f) when deg(f) != 6.
struct IterateBoundReport {
    int n = 0, e = 0;
    int max_k = 0;
    size_t split_count = 0;
    IterateSplit extremal;
    int extremal_e = 0;
    bool ok = false;
};

IterateBoundReport iterates_bound_check(const Poly& f, int e, int coeff_cap = 4096);

// The doubling family f_i = X(1 + X^{2^i})^{2^{m-i}}: with f = f_m∘X^2 and
// k = m+1, the ladder X^2∘f_i = f_{i-1}∘X^2 pushes all squarings right and
// gives f^(k) = a∘b for a = f_m∘…∘f_0, b = X^{2^{m+1}}; deg(f) = 2^{m+1}+2
// divides neither side.
struct DoublingFamily {
    std::vector<Poly> chain;  // f_m down to f_0
    Poly f, a, b;
    bool ladder_checks = false;
};

DoublingFamily doubling_family(int m, int coeff_cap = 1 << 17);

// Per-split, per-factor structure checks on decompositions of f^(e):
//   1. a factor outside the exchange family keeps its crossing products <= 2
//      (the bound is read as a crossing-product bound; see the report flag)
//   2. a factor neither cyclic nor dihedral forces
//      n >= 6 deg(u) >= 6(2^{k-2}+1) or n >= 2 deg(u) >= 2^k+2
//   3. a dihedral factor with k > 3 forces f conjugate to ±T_n
//   4. all-cyclic factors with k > 2 force f conjugate to X^n
struct IterateChainReport {
    int e = 0;
    int k_max = 0;
    size_t splits_checked = 0;  // reduced splits with k > 1
    bool clause1_quadrant_reading = true;
    bool ok = true;
    std::vector<std::string> violations;
};

IterateChainReport iterate_chain_check(const Poly& f, int e, int coeff_cap = 4096);

}  // namespace polydec
