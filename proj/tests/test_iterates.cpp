#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polydec/chebyshev.hpp"
#include "polydec/corpus.hpp"
#include "polydec/decompose.hpp"
#include "polydec/iterates.hpp"

using namespace polydec;

static Poly X = Poly::X();
static Poly C(long v) { return Poly(Rational(v)); }

TEST_CASE("iterate basics") {
    Poly f = X * X + C(1);
    CHECK(iterate(f, 0) == X);
    CHECK(iterate(f, 1) == f);
    CHECK(iterate(chebyshev(2), 2) == chebyshev(4));
    CHECK(iterate(chebyshev(2), 3) == chebyshev(8));
}

TEST_CASE("splitting iterates") {
    // (X^3+1)^2 squared splits along the 4 * 9 pattern
    Poly f = compose(X * X, X + C(1), Poly::monomial(3));
    REQUIRE(f == (Poly::monomial(3) + C(1)).pow(2));
    Poly F = iterate(f, 2);
    Poly pa = compose(X * X, X + C(1), X * X);
    Poly pb = compose(Poly::monomial(3), X + C(1), Poly::monomial(3));
    CHECK(compose(pa, pb) == F);

    auto splits = split_iterate(f, 2);
    std::set<int> degs;
    bool found = false;
    for (const auto& [a, b] : splits) {
        CHECK(compose(a, b) == F);
        degs.insert(b.degree());
        if (b.degree() == 9) found = true;
    }
    CHECK(found);
    CHECK(degs.count(1) == 1);
    CHECK(degs.count(36) == 1);

    auto pw = split_iterate(Poly::monomial(2), 3);
    REQUIRE(pw.size() == 4);
    for (int j = 0; j < 4; ++j) CHECK(pw[static_cast<size_t>(j)].second.degree() == 1 << j);

    CHECK_THROWS_AS(split_iterate(f, 5), std::length_error);
    CHECK_THROWS_AS(split_iterate(X + C(1), 2), std::invalid_argument);
}

TEST_CASE("reducing splits") {
    Poly f = compose(X * X, X + C(1), Poly::monomial(3));
    Poly pa = compose(X * X, X + C(1), X * X);
    Poly pb = compose(Poly::monomial(3), X + C(1), Poly::monomial(3));
    IterateSplit s = reduce_split(f, pa, pb, 2);
    CHECK(s.i == 0);
    CHECK(s.j == 0);
    CHECK(s.k == 2);
    CHECK(s.a_hat == pa);
    CHECK(s.b_hat == pb);

    IterateSplit t = reduce_split(f, iterate(f, 2), X, 2);
    CHECK(t.i == 2);
    CHECK(t.j == 0);
    CHECK(t.k == 0);
    CHECK(t.a_hat == X);
    CHECK(t.b_hat == X);

    IterateSplit u = reduce_split(f, X, iterate(f, 2), 2);
    CHECK(u.j == 2);
    CHECK(u.k == 0);

    CHECK_THROWS_AS(reduce_split(f, pa, pb, 3), std::invalid_argument);
}

TEST_CASE("degree six tightness") {
    Poly f = compose(chebyshev(3), chebyshev(2) * C(2));
    Poly a = compose(chebyshev(3), chebyshev(3) * C(2), chebyshev(3) * C(4) + C(6));
    Poly b = compose(chebyshev(4), chebyshev(2) * C(2));
    REQUIRE(compose(a, b) == iterate(f, 3));

    IterateSplit s = reduce_split(f, a, b, 3);
    CHECK(s.i == 0);
    CHECK(s.j == 0);
    CHECK(s.k == 3);

    IterateBoundReport rep = iterates_bound_check(f, 3);
    CHECK(rep.max_k == 3);
    CHECK(rep.ok);  // 2^3 = deg(f) + 2, the one degree where the bound is tight
    CHECK(rep.extremal.k == 3);
}

TEST_CASE("conjugate form detectors") {
    CHECK(is_conjugate_power(Poly::monomial(6)));
    CHECK(is_conjugate_power((X - C(1)).pow(6) + C(1)));
    CHECK(is_conjugate_power(C(2) * Poly::monomial(3)));
    CHECK(!is_conjugate_power((X - C(1)).pow(6) + C(2)));
    CHECK(!is_conjugate_power(chebyshev(4)));

    CHECK(is_conjugate_chebyshev(chebyshev(2)));
    CHECK(is_conjugate_chebyshev(chebyshev(5)));
    CHECK(is_conjugate_chebyshev(chebyshev(6)));
    CHECK(is_conjugate_chebyshev(chebyshev(5) * C(-1)));
    Linear l(Rational(1), Rational(1));
    CHECK(is_conjugate_chebyshev(lcomp(l, rcomp(chebyshev(5), l.inverse()))));
    CHECK(!is_conjugate_chebyshev(chebyshev(3) * C(2)));
    CHECK(!is_conjugate_chebyshev(X * X));
    CHECK(!is_conjugate_chebyshev(compose(chebyshev(3), chebyshev(2) * C(2))));
}

TEST_CASE("exchange family membership") {
    CHECK(in_exchange_family(Poly::monomial(7)));
    CHECK(in_exchange_family(chebyshev(2)));
    CHECK(in_exchange_family(chebyshev(3)));
    CHECK(in_exchange_family(chebyshev(5)));
    CHECK(!in_exchange_family(chebyshev(4)));
    CHECK(in_exchange_family(X * (X * X + C(1))));
    CHECK(in_exchange_family(X * (X + C(1)).pow(2)));
    CHECK(in_exchange_family(X * (X + C(1)).pow(4)));
    CHECK(!in_exchange_family(Poly::monomial(4) + X * X + X));
    CHECK(!in_exchange_family(X + C(1)));
}

TEST_CASE("iterate bound sweep") {
    Poly f = (Poly::monomial(3) + C(1)).pow(2);
    IterateBoundReport rep = iterates_bound_check(f, 3);
    CHECK(rep.n == 6);
    CHECK(rep.max_k == 2);
    CHECK(rep.ok);
    CHECK(rep.split_count > 4);

    CHECK_THROWS_AS(iterates_bound_check(Poly::monomial(6), 2), std::invalid_argument);
    CHECK_THROWS_AS(iterates_bound_check(chebyshev(6), 2), std::invalid_argument);
}

TEST_CASE("doubling family") {
    for (int m : {1, 2}) {
        DoublingFamily d = doubling_family(m);
        CHECK(d.ladder_checks);
        CHECK(d.f.degree() == (1 << (m + 1)) + 2);
        CHECK(d.a.degree() % d.f.degree() != 0);
        CHECK(d.b.degree() % d.f.degree() != 0);
        CHECK(is_indecomposable(d.chain.front()));
    }
    DoublingFamily d1 = doubling_family(1);
    CHECK(d1.chain.front() == X * (X * X + C(1)));
    CHECK(d1.chain.back() == X * (X + C(1)).pow(2));
    CHECK(d1.b == Poly::monomial(4));

    CHECK_THROWS_AS(doubling_family(3, 4096), std::length_error);
    CHECK_THROWS_AS(doubling_family(4), std::length_error);
    CHECK_THROWS_AS(doubling_family(0), std::invalid_argument);
}

TEST_CASE("chain clause checks") {
    // conjugate power: only the all-cyclic clause can fire, and it holds
    Poly cp = (X - C(1)).pow(6) + C(1);
    IterateChainReport r1 = iterate_chain_check(cp, 3);
    CHECK(r1.ok);
    CHECK(r1.k_max == 3);
    CHECK(r1.splits_checked >= 1);

    // indecomposable of prime-power degree: no split survives reduction
    Poly pp = Poly::monomial(4) + X * X + X;
    IterateChainReport r2 = iterate_chain_check(pp, 3);
    CHECK(r2.ok);
    CHECK(r2.splits_checked == 0);
    for (int e = 1; e <= 2; ++e)
        for (const auto& [a, b] : split_iterate(pp, e))
            CHECK(reduce_split(pp, a, b, e).k == 0);

    // doubling family at m=2 meets the degree inequality with equality
    DoublingFamily d = doubling_family(2);
    IterateChainReport r3 = iterate_chain_check(d.f, 3);
    CHECK(r3.ok);
    CHECK(r3.k_max == 3);
    CHECK(r3.clause1_quadrant_reading);

    // a factor outside the exchange family: crossing products stay <= 2
    Poly g = Poly::monomial(4) + X * X + X;
    Poly f24 = compose(Poly::monomial(2), g, Poly::monomial(3));
    IterateChainReport r4 = iterate_chain_check(f24, 2);
    CHECK(r4.ok);
    CHECK(r4.splits_checked >= 1);

    // dihedral factors at k = 4 force the Chebyshev conjugation
    IterateChainReport r5 = iterate_chain_check(chebyshev(6), 4);
    CHECK(r5.ok);
    CHECK(r5.k_max == 4);
}

TEST_CASE("reduction invariants over random composites") {
    auto items = corpus(2024, 25);
    int reduced = 0;
    for (const auto& item : items) {
        for (int e = 1; e <= 3; ++e) {
            long long size = 1;
            for (int t = 0; t < e; ++t) size *= item.f.degree();
            if (size + 1 > 1024) break;
            Poly F = iterate(item.f, static_cast<unsigned>(e));
            for (const auto& [a, b] : split_iterate(item.f, e, 1024)) {
                IterateSplit s = reduce_split(item.f, a, b, e);
                CHECK(compose(iterate(item.f, static_cast<unsigned>(s.i)), s.a_hat) == a);
                CHECK(compose(s.b_hat, iterate(item.f, static_cast<unsigned>(s.j))) == b);
                CHECK(compose(s.a_hat, s.b_hat) == iterate(item.f, static_cast<unsigned>(s.k)));
                CHECK(s.a_hat.degree() % item.f.degree() != 0);
                CHECK(s.b_hat.degree() % item.f.degree() != 0);
                ++reduced;
            }
        }
    }
    CHECK(reduced > 50);
}
