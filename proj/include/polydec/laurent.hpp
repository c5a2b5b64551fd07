#pragma once

#include <map>

#include "polydec/poly.hpp"

namespace polydec {

// Sparse Laurent polynomial in Y; no explicit zero coefficients stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant) { set(0, constant); }

    static LaurentPoly term(long e, const Rational& coeff) {
        LaurentPoly p;
        p.set(e, coeff);
        return p;
    }

    void set(long e, const Rational& coeff) {
        if (coeff == 0) c_.erase(e);
        else c_[e] = coeff;
    }
    Rational coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }
    const std::map<long, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) set(e, coeff(e) + v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, v] : b.c_) r.set(e, r.coeff(e) - v);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + va * vb);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  private:
    std::map<long, Rational> c_;
};

// f(arg) for an ordinary polynomial f by Horner over Laurent arithmetic
LaurentPoly laurent_substitute(const Poly& f, const LaurentPoly& arg);

}  // namespace polydec
