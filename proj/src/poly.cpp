#include "polydec/poly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace polydec {

Poly Poly::monomial(int e, const Rational& coeff) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (coeff == 0) return Poly();
    std::vector<Rational> c(static_cast<size_t>(e) + 1, Rational(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

namespace {

size_t bit_length(const Integer& x) {
    if (x == 0) return 1;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Product of integer coefficient vectors by Kronecker substitution: pack both
// operands into single big integers with fixed-width slots, multiply once, and
// decode slots with borrow handling for negative coefficients.
std::vector<Integer> imul_kronecker(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer maxa(0), maxb(0);
    for (const auto& x : a) if (cmp(abs(x), maxa) > 0) maxa = abs(x);
    for (const auto& x : b) if (cmp(abs(x), maxb) > 0) maxb = abs(x);
    size_t count_bits = 1;
    while ((size_t(1) << count_bits) < std::min(a.size(), b.size())) ++count_bits;
    size_t bits = bit_length(maxa) + bit_length(maxb) + count_bits + 2;
    size_t slot_bytes = (bits + 7) / 8;
    bits = slot_bytes * 8;

    auto pack = [&](const std::vector<Integer>& v) {
        std::vector<unsigned char> pos(v.size() * slot_bytes, 0), neg(v.size() * slot_bytes, 0);
        bool any_neg = false;
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            unsigned char* dst = (v[i] > 0 ? pos.data() : (any_neg = true, neg.data())) + i * slot_bytes;
            size_t written = 0;
            mpz_export(dst, &written, -1, 1, 0, 0, Integer(abs(v[i])).get_mpz_t());
        }
        Integer p, n(0);
        mpz_import(p.get_mpz_t(), pos.size(), -1, 1, 0, 0, pos.data());
        if (any_neg) mpz_import(n.get_mpz_t(), neg.size(), -1, 1, 0, 0, neg.data());
        return Integer(p - n);
    };

    Integer prod = pack(a) * pack(b);
    int sign = sgn(prod);
    Integer mag = abs(prod);

    size_t nslots = a.size() + b.size() - 1;
    std::vector<unsigned char> buf(nslots * slot_bytes + slot_bytes, 0);
    size_t written = 0;
    if (mag != 0) mpz_export(buf.data(), &written, -1, 1, 0, 0, mag.get_mpz_t());

    std::vector<Integer> out(nslots);
    Integer half; mpz_ui_pow_ui(half.get_mpz_t(), 2, bits - 1);
    Integer full = half * 2;
    int carry = 0;
    Integer v;
    for (size_t i = 0; i < nslots; ++i) {
        mpz_import(v.get_mpz_t(), slot_bytes, -1, 1, 0, 0, buf.data() + i * slot_bytes);
        v += carry;
        if (v >= half) {
            out[i] = v - full;
            carry = 1;
        } else {
            out[i] = v;
            carry = 0;
        }
        if (sign < 0) out[i] = -out[i];
    }
    return out;
}

// common denominator and integer numerators: f = (1/den) * sum num[i] X^i
void to_integer_form(const Poly& f, std::vector<Integer>& num, Integer& den) {
    den = 1;
    for (const auto& c : f.coeffs()) den = lcm(den, Integer(c.get_den()));
    num.clear();
    num.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) num.push_back(Integer(c.get_num()) * (den / c.get_den()));
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    size_t na = a.c_.size(), nb = b.c_.size();
    if (std::min(na, nb) < 24) {
        std::vector<Rational> out(na + nb - 1, Rational(0));
        for (size_t i = 0; i < na; ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < nb; ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    std::vector<Integer> ia, ib;
    Integer da, db;
    to_integer_form(a, ia, da);
    to_integer_form(b, ib, db);
    std::vector<Integer> ic = imul_kronecker(ia, ib);
    Integer den = da * db;
    std::vector<Rational> out;
    out.reserve(ic.size());
    for (auto& x : ic) out.push_back(make_rational(x, den));
    return Poly(std::move(out));
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int e = a.degree(); e >= 0; --e) {
        int c = cmp(a.coeff(e), b.coeff(e));
        if (c != 0) return c < 0;
    }
    return false;
}

Poly Poly::pow(unsigned e) const {
    Poly result(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

Poly derivative(const Poly& f) {
    if (f.is_constant()) return Poly();
    std::vector<Rational> c(static_cast<size_t>(f.degree()), Rational(0));
    for (int e = 1; e <= f.degree(); ++e) c[static_cast<size_t>(e - 1)] = f.coeff(e) * e;
    return Poly(std::move(c));
}

Poly compose(const Poly& outer, const Poly& inner) {
    if (outer.is_zero()) return Poly();
    if (outer.is_constant()) return outer;
    // single-term inner: spread coefficients, no multiplication needed
    int nz = 0, nze = 0;
    for (int e = 0; e <= inner.degree(); ++e)
        if (inner.coeff(e) != 0) { ++nz; nze = e; }
    if (nz == 1 && nze >= 1) {
        std::vector<Rational> out(static_cast<size_t>(outer.degree()) * nze + 1, Rational(0));
        Rational p(1);
        const Rational beta = inner.coeff(nze);
        for (int e = 0; e <= outer.degree(); ++e) {
            if (outer.coeff(e) != 0) out[static_cast<size_t>(e) * nze] = outer.coeff(e) * p;
            p *= beta;
        }
        return Poly(std::move(out));
    }
    // Horner over the nonzero terms only, bridging exponent gaps with cached
    // binary powers of the inner polynomial; much cheaper for sparse outers.
    std::vector<Poly> sq{inner};
    auto power = [&sq](unsigned g) {
        Poly r(Rational(1));
        for (size_t j = 0; g != 0; ++j, g >>= 1) {
            if (j >= sq.size()) sq.push_back(sq.back() * sq.back());
            if (g & 1u) r = r * sq[j];
        }
        return r;
    };
    Poly acc(outer.lc());
    int prev = outer.degree();
    for (int e = outer.degree() - 1; e >= 0; --e) {
        if (outer.coeff(e) == 0) continue;
        acc = acc * power(static_cast<unsigned>(prev - e));
        acc += Poly(outer.coeff(e));
        prev = e;
    }
    if (prev > 0) acc = acc * power(static_cast<unsigned>(prev));
    return acc;
}

Poly compose(const Poly& a, const Poly& b, const Poly& c) {
    return compose(a, compose(b, c));
}

Poly compose(const std::vector<Poly>& chain) {
    Poly acc = Poly::X();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) acc = compose(*it, acc);
    return acc;
}

Poly iterate(const Poly& f, unsigned k) {
    // left accumulation keeps the Horner loop length at deg(f) per level
    Poly acc = Poly::X();
    for (unsigned i = 0; i < k; ++i) acc = compose(f, acc);
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        Rational c = coeff(e);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e > 0) {
            if (a != 1) os << "*";
            os << "X";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace polydec
