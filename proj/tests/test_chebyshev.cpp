#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polydec/chebyshev.hpp"
#include "polydec/laurent.hpp"

using namespace polydec;

TEST_CASE("base cases and recurrence") {
    CHECK(chebyshev(0) == Poly(Rational(2)));
    CHECK(chebyshev(1) == Poly::X());
    CHECK(chebyshev(2) == Poly::from_ints({-2, 0, 1}));
    CHECK(chebyshev(5) == Poly::from_ints({0, 5, 0, -5, 0, 1}));
}

TEST_CASE("degree and top terms") {
    for (unsigned n = 2; n <= 12; ++n) {
        const Poly& t = chebyshev(n);
        CHECK(t.degree() == static_cast<int>(n));
        CHECK(t.lc() == 1);
        CHECK(t.coeff(static_cast<int>(n) - 1) == 0);
        CHECK(t.coeff(static_cast<int>(n) - 2) == -Rational(n));
    }
}

TEST_CASE("odd/even symmetry") {
    Poly minus_x = -Poly::X();
    for (unsigned n = 0; n <= 12; ++n) {
        Poly reflected = compose(chebyshev(n), minus_x);
        if (n % 2 == 0) CHECK(reflected == chebyshev(n));
        else CHECK(reflected == -chebyshev(n));
    }
}

TEST_CASE("laurent substitution") {
    for (unsigned n = 1; n <= 20; ++n) CHECK(laurent_substitution_check(n));
}

TEST_CASE("laurent arithmetic sanity") {
    LaurentPoly y = LaurentPoly::term(1, Rational(1));
    LaurentPoly yi = LaurentPoly::term(-1, Rational(1));
    LaurentPoly s = y + yi;
    LaurentPoly sq = s * s;
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(0) == 2);
    CHECK(sq.coeff(-2) == 1);
    CHECK((sq - LaurentPoly(Rational(2))).coeff(0) == 0);
}

TEST_CASE("commuting compositions") {
    CHECK(cheb_semigroup_check(2, 3));
    CHECK(cheb_semigroup_check(1, 9));
    CHECK(cheb_semigroup_check(4, 5));
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned m = 1; m <= 8; ++m) CHECK(cheb_semigroup_check(n, m));
}

TEST_CASE("levi identity") {
    for (unsigned n = 1; n <= 12; ++n) CHECK(levi_dihedral_identity(n));
}

TEST_CASE("levi identity negative control") {
    // X^n + 1 in place of T_n must fail for n >= 2
    Poly x2(Poly::X());
    for (unsigned n = 2; n <= 6; ++n) {
        Poly f = Poly::monomial(static_cast<int>(n)) + Poly(Rational(1));
        Poly df = derivative(f);
        Poly lhs = (f * f - Poly(Rational(4))) * Rational(static_cast<long>(n * n));
        Poly rhs = Poly::from_ints({-4, 0, 1}) * df * df;
        CHECK(lhs != rhs);
    }
}
