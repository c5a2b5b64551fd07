#pragma once

#include "polydec/poly.hpp"

namespace polydec {

// Normalized Chebyshev polynomial: T_0 = 2, T_1 = X, T_n = X*T_{n-1} - T_{n-2}.
// Satisfies T_n(Y + 1/Y) = Y^n + 1/Y^n. (The classical C_n relates to this by
// T_n(2X) = 2*C_n(X); only the normalized form is used here.)
const Poly& chebyshev(unsigned n);

// verifies T_n(Y + 1/Y) == Y^n + Y^{-n} in exact Laurent arithmetic
bool laurent_substitution_check(unsigned n);

// verifies T_n∘T_m == T_m∘T_n == T_{nm}
bool cheb_semigroup_check(unsigned n, unsigned m);

// verifies Levi's differential identity n^2 (T_n^2 - 4) == (X^2 - 4) T_n'^2
bool levi_dihedral_identity(unsigned n);

}  // namespace polydec
