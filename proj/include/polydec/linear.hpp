#pragma once

#include "polydec/poly.hpp"

namespace polydec {

// scale*X + shift with scale != 0; carries every equivalence between
// decompositions.
struct Linear {
    Rational scale{1};
    Rational shift{0};

    Linear() = default;
    Linear(Rational a, Rational b) : scale(std::move(a)), shift(std::move(b)) {
        if (scale == 0) throw std::invalid_argument("linear with zero scale");
    }

    static Linear identity() { return Linear(); }
    bool is_identity() const { return scale == 1 && shift == 0; }

    Poly to_poly() const {
        std::vector<Rational> c{shift, scale};
        return Poly(std::move(c));
    }

    Rational apply(const Rational& x) const { return scale * x + shift; }

    Linear inverse() const {
        Rational inv = rational_inverse(scale);
        return Linear(inv, -shift * inv);
    }

    // (this ∘ o)(X)
    Linear after(const Linear& o) const { return Linear(scale * o.scale, scale * o.shift + shift); }

    friend bool operator==(const Linear& a, const Linear& b) {
        return a.scale == b.scale && a.shift == b.shift;
    }
    friend bool operator!=(const Linear& a, const Linear& b) { return !(a == b); }
};

// l(f(X)) and f(l(X))
inline Poly lcomp(const Linear& l, const Poly& f) { return f * l.scale + Poly(l.shift); }
inline Poly rcomp(const Poly& f, const Linear& l) { return compose(f, l.to_poly()); }

// true when f is degree 1; extracts it
inline bool as_linear(const Poly& f, Linear& out) {
    if (f.degree() != 1) return false;
    out = Linear(f.coeff(1), f.coeff(0));
    return true;
}

}  // namespace polydec
