#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydec {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps these canonical: lowest terms, den > 0

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_inverse(const Rational& x) {
    if (x == 0) throw std::invalid_argument("inverse of zero");
    Rational r;
    mpq_inv(r.get_mpq_t(), x.get_mpq_t());
    return r;
}

// Dense univariate polynomial over Q, coefficients low to high.
// Invariant: the stored vector is empty (zero polynomial) or ends in a
// nonzero coefficient.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly X() { return monomial(1); }
    static Poly monomial(int e, const Rational& coeff = Rational(1));
    // Convenience: integer coefficients low to high.
    static Poly from_ints(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int e) const {
        if (e < 0 || e >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(e)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero");
        return c_.back();
    }
    Rational constant_term() const { return coeff(0); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rational eval(const Rational& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(Poly a) { for (auto& x : a.c_) x = -x; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { a *= s; return a; }
    friend Poly operator*(const Rational& s, Poly a) { a *= s; return a; }
    friend Poly operator/(Poly a, const Rational& s) {
        a *= rational_inverse(s);
        return a;
    }
    friend Poly operator+(Poly a, const Rational& s) { a += Poly(s); return a; }
    friend Poly operator-(Poly a, const Rational& s) { a -= Poly(s); return a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // lexicographic by (degree, coefficients high to low); used for canonical ordering
    friend bool operator<(const Poly& a, const Poly& b);

    Poly pow(unsigned e) const;

    std::string str() const;  // human-readable, highest degree first

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

Poly derivative(const Poly& f);

// outer(inner(X))
Poly compose(const Poly& outer, const Poly& inner);
Poly compose(const Poly& a, const Poly& b, const Poly& c);
Poly compose(const std::vector<Poly>& chain);  // empty chain -> X

// k-fold self-composition; iterate(f, 0) = X
Poly iterate(const Poly& f, unsigned k);

}  // namespace polydec
