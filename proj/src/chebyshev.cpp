#include "polydec/chebyshev.hpp"

#include <deque>
#include <mutex>

#include "polydec/laurent.hpp"

namespace polydec {

const Poly& chebyshev(unsigned n) {
    // deque: references to cached entries stay valid while the cache grows
    static std::deque<Poly> cache{Poly(Rational(2)), Poly::X()};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        size_t k = cache.size();
        cache.push_back(Poly::X() * cache[k - 1] - cache[k - 2]);
    }
    return cache[n];
}

bool laurent_substitution_check(unsigned n) {
    LaurentPoly arg = LaurentPoly::term(1, Rational(1)) + LaurentPoly::term(-1, Rational(1));
    LaurentPoly lhs = laurent_substitute(chebyshev(n), arg);
    LaurentPoly rhs = LaurentPoly::term(static_cast<long>(n), Rational(1)) +
                      LaurentPoly::term(-static_cast<long>(n), Rational(1));
    return lhs == rhs;
}

bool cheb_semigroup_check(unsigned n, unsigned m) {
    const Poly& tn = chebyshev(n);
    const Poly& tm = chebyshev(m);
    const Poly& tnm = chebyshev(n * m);
    return compose(tn, tm) == tnm && compose(tm, tn) == tnm;
}

bool levi_dihedral_identity(unsigned n) {
    const Poly& f = chebyshev(n);
    Poly df = derivative(f);
    Poly xx4 = Poly::from_ints({-4, 0, 1});
    Poly lhs = (f * f - Poly(Rational(4))) * Rational(static_cast<long>(n) * static_cast<long>(n));
    return lhs == xx4 * df * df;
}

}  // namespace polydec
