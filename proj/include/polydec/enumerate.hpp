#pragma once

#include <optional>
#include <vector>

#include "polydec/decompose.hpp"
#include "polydec/forms.hpp"
#include "polydec/linear.hpp"
#include "polydec/poly.hpp"

namespace polydec {

// Canonical representatives of every equivalence class of complete
// decompositions, reached by breadth-first search over adjacent-pair swaps.
// visit_cap limits the number of explored decompositions (0 = unlimited).
std::vector<Decomposition> all_classes(const Poly& f, size_t visit_cap = 0);

// Degree matching between two complete decompositions of the same polynomial:
// equal degrees keep their relative order, making the permutation unique.
struct SigmaMatch {
    std::vector<int> permutation;  // 0-based: position i of U maps to permutation[i] of V
    std::vector<int> source_degrees, target_degrees;
};

SigmaMatch sigma_match(const Decomposition& U, const Decomposition& V);

// Degree products over the four crossing index sets at (i, j), 1-based:
//   LL = {k < i : sigma(k) < sigma(j)}     LR = {k < i : sigma(k) > sigma(j)}
//   RL = {k > i : sigma(k) < sigma(j)}     RR = {k > i : sigma(k) > sigma(j)}
struct QuadrantProducts {
    long long LL = 1, LR = 1, RL = 1, RR = 1;
};

QuadrantProducts quadrants(const Decomposition& U, const Decomposition& V, int i, int j);

// Every pair whose order is inverted by sigma must have coprime degrees.
bool coprime_inversion_check(const Decomposition& U, const Decomposition& V);

// The factor-crossing bundle at position k (1-based): the five identities
//   (1) u_1..u_{k-1} = a∘b     and  u_{k+1}..u_r = c∘d
//   (2) b∘u_k = u_hat∘b_hat
//   (3) u_hat∘b_hat∘c = c_tld∘u_tld∘b_tld
//   (4) u_k∘c = c_bar∘u_bar
//   (5) b∘c_bar∘u_bar = c_dot∘u_tld∘b_dot
// with deg(a) = LL, deg(d) = RR, the b's of degree LR, the c's of degree RL,
// and the middle factors indecomposable of degree deg(u_k).
struct CrossingWitness {
    QuadrantProducts q;
    Poly a, b, c, d;
    Poly u_hat, b_hat;
    Poly c_tld, u_tld, b_tld;
    Poly c_bar, u_bar;
    Poly c_dot, b_dot;
};

// Throws std::runtime_error naming the first identity that cannot be built.
CrossingWitness crossing_witness(const Decomposition& U, const Decomposition& V, int k);

enum class BlockTag { CyclicBlock, DihedralBlock, Indecomposable };

struct BlockForm {
    Linear leading;
    std::vector<std::pair<Poly, BlockTag>> blocks;

    Poly recompose() const;
};

BlockForm block_form(const Poly& f);

// Bound m·n < deg(u_k) for a factor that is neither cyclic nor dihedral,
// where n = LR(U,V,k,k) and m = RL(U,V,k,k).
struct InversionBoundReport {
    long long n = 1, m = 1;
    int p = 0;  // deg(u_k)
    bool ok = false;
    std::optional<int> twist_exponent;  // s from the exchange at u_k, when rational
};

InversionBoundReport inversion_bound_check(const Decomposition& U, const Decomposition& V, int k);

// When the right-crossing product past position i exceeds 2, the span from the
// dihedral factor u_k through u_i must itself be dihedral (and mirrored).
struct ChebMoveReport {
    bool applicable = false;
    long long crossing = 1;
    bool holds = true;  // vacuously true when not applicable
};

ChebMoveReport cheb_move_check(const Decomposition& U, const Decomposition& V, int k, int i);

// For an all-cyclic chain: positions where consecutive branch data misalign
// are barriers no Ritt move sequence can cross.
struct BarrierReport {
    std::vector<int> barriers;  // 1-based positions k
    bool ok = true;
    size_t class_count = 0;
};

BarrierReport cyclic_chain_barrier_check(const Decomposition& U);

}  // namespace polydec
