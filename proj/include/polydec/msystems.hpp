#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace polydec {

// Ramification bookkeeping for a coprime pair a∘b = c∘d: one (A_i, B_i) pair
// per finite branch point, with A_i the ramification multiset on the side of
// degree n and B_i on the side of degree m. Multisets are kept sorted.
struct MultisetSystem {
    int m = 0, n = 0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
};

// The two Riemann-Hurwitz ledgers:
//   each A_i sums to n and each B_i to m;
//   sum over i of (n - |A_i|) = n - 1 = sum of (alpha - gcd(alpha, beta));
//   and the mirrored equations for m.
// Throws std::invalid_argument when the structural shape is wrong (m, n not
// coprime or < 2, empty or nonpositive multisets, a pair with no entry > 1).
bool check_hypotheses(const MultisetSystem& sys);

enum class ConclusionTag { C1, C2, C3, Violation };

struct Conclusion {
    ConclusionTag tag = ConclusionTag::Violation;
    std::optional<int> witness_index;  // 0-based pair index for C1/C2
};

// First matching conclusion: a fully ramified A-side pair, a fully ramified
// B-side pair, or the two-point all-double profile. Requires the hypotheses.
Conclusion classify_conclusion(const MultisetSystem& sys);

// All systems with at most k_max pairs passing the hypotheses, canonically
// ordered and deduplicated up to reindexing of the pairs.
std::vector<MultisetSystem> enumerate_systems(int m, int n, int k_max, int size_bound = 7);

// sum over i of (mn - sum of gcd(alpha, beta)) = mn - 1
bool rh_identity_check(const MultisetSystem& sys);

}  // namespace polydec
