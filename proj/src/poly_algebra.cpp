#include "polydec/poly_algebra.hpp"

#include <algorithm>
#include <map>

namespace polydec {

Poly SquarefreePart::reconstruct() const {
    Poly acc{Rational(1)};
    acc = acc * unit;
    for (const auto& [base, mult] : factors) acc = acc * base.pow(static_cast<unsigned>(mult));
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (f.degree() < g.degree()) return {Poly(), f};
    std::vector<Rational> rem(f.coeffs());
    int dq = f.degree() - g.degree();
    std::vector<Rational> quo(static_cast<size_t>(dq) + 1, Rational(0));
    Rational ginv = Rational(1) / g.lc();
    for (int k = dq; k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + g.degree())] * ginv;
        if (q == 0) continue;
        quo[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= g.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * g.coeff(j);
    }
    rem.resize(static_cast<size_t>(std::max(g.degree(), 0)));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0)");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r.is_zero() ? r : r / r.lc();
    }
    return a / a.lc();
}

bool is_squarefree(const Poly& f) {
    if (f.is_constant()) return true;
    return poly_gcd(f, derivative(f)).is_constant();
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree part of zero");
    if (f.is_constant()) return Poly(Rational(1));
    Poly g = poly_gcd(f, derivative(f));
    Poly s = exact_div(f, g);
    return s / s.lc();
}

SquarefreePart squarefree_decomposition(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("squarefree decomposition needs degree >= 1");
    SquarefreePart out;
    out.unit = f.lc();
    Poly fm = f / f.lc();
    Poly df = derivative(fm);
    Poly u = poly_gcd(fm, df);
    Poly v = exact_div(fm, u);
    Poly w = exact_div(df, u);
    int i = 1;
    while (v.degree() > 0) {
        Poly s = w - derivative(v);
        Poly h = s.is_zero() ? v : poly_gcd(v, s);
        if (h.degree() > 0) out.factors.emplace_back(h, i);
        v = exact_div(v, h);
        w = exact_div(s, h);
        ++i;
    }
    return out;
}

Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant with zero polynomial");
    Poly a = f, b = g;
    Rational acc(1);
    bool neg = false;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2) && (b.degree() % 2)) neg = !neg;
    }
    while (b.degree() > 0) {
        Poly r = divmod(a, b).second;
        if (r.is_zero()) return Rational(0);
        if ((a.degree() % 2) && (b.degree() % 2)) neg = !neg;
        Rational lb = b.lc();
        Rational p(1);
        for (int i = 0; i < a.degree() - r.degree(); ++i) p *= lb;
        acc *= p;
        a = b;
        b = r;
    }
    // b is a nonzero constant now
    Rational p(1);
    for (int i = 0; i < a.degree(); ++i) p *= b.lc();
    acc *= p;
    return neg ? -acc : acc;
}

Poly resultant_in_t(const Poly& f) {
    if (f.degree() < 2) throw std::invalid_argument("resultant_in_t needs degree >= 2");
    const Poly df = derivative(f);
    const int n = f.degree();
    // B(T) has degree <= n-1: sample n points, interpolate (Newton form)
    std::vector<Rational> xs, ys;
    for (int j = 0; j < n; ++j) {
        Rational t(j);
        xs.emplace_back(t);
        ys.push_back(resultant(f - t, df));
    }
    std::vector<Rational> coef(ys);  // divided differences in place
    for (int k = 1; k < n; ++k)
        for (int j = n - 1; j >= k; --j)
            coef[static_cast<size_t>(j)] =
                (coef[static_cast<size_t>(j)] - coef[static_cast<size_t>(j - 1)]) / (xs[static_cast<size_t>(j)] - xs[static_cast<size_t>(j - k)]);
    Poly acc;
    for (int j = n - 1; j >= 0; --j) {
        acc = acc * (Poly::X() - Poly(xs[static_cast<size_t>(j)]));
        acc += Poly(coef[static_cast<size_t>(j)]);
    }
    return acc;
}

std::vector<Poly> radix_expand(const Poly& f, const Poly& g) {
    if (g.degree() < 1) throw std::invalid_argument("radix base must be nonconstant");
    std::vector<Poly> digits;
    Poly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = divmod(rest, g);
        digits.push_back(r);
        rest = q;
    }
    if (digits.empty()) digits.push_back(Poly());
    return digits;
}

namespace {

void factor_into(Integer n, std::map<Integer, int>& out);

Integer pollard_rho(const Integer& n) {
    // Brent's variant; n odd composite
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    while (true) {
        Integer y = rng.get_z_range(n - 2) + 1;
        Integer c = rng.get_z_range(n - 2) + 1;
        Integer x = y, d(1), q(1), ys(0);
        const int m = 128;
        int r = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < r; ++i) y = (y * y + c) % n;
            for (int k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (int i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    for (Integer p(17); p * p <= n && p < 100000; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Integer> divisors_of(const Integer& n) {
    std::map<Integer, int> fac;
    factor_into(abs(n), fac);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        size_t sz = divs.size();
        Integer pe(1);
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational roots of zero");
    std::vector<Rational> roots;
    if (f.is_constant()) return roots;
    Poly s = squarefree_part(f);
    // strip the root at zero first
    int shift = 0;
    while (s.coeff(shift) == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        std::vector<Rational> c(s.coeffs().begin() + shift, s.coeffs().end());
        s = Poly(std::move(c));
    }
    if (s.degree() >= 1) {
        // primitive integer form: candidates p/q with p | a0, q | lead
        Integer den(1);
        for (const auto& c : s.coeffs()) den = lcm(den, Integer(c.get_den()));
        std::vector<Integer> ic;
        for (const auto& c : s.coeffs()) ic.push_back(Integer(c.get_num()) * (den / c.get_den()));
        Integer content(0);
        for (const auto& x : ic) content = gcd(content, x);
        for (auto& x : ic) x /= content;
        for (const Integer& p : divisors_of(ic.front()))
            for (const Integer& q : divisors_of(ic.back()))
                for (int sign : {1, -1}) {
                    Rational cand = make_rational(sign * p, q);
                    if (s.eval(cand) == 0) roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<Rational> rational_root_of(const Rational& x, unsigned e) {
    if (e == 0) throw std::invalid_argument("zeroth root");
    if (x == 0) return Rational(0);
    if (x < 0 && e % 2 == 0) return std::nullopt;
    Integer num = abs(Integer(x.get_num())), den(x.get_den());
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), e)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), e)) return std::nullopt;
    Rational r = make_rational(rn, rd);
    return x < 0 ? Rational(-r) : r;
}

std::optional<Poly> poly_nth_root(const Poly& f, unsigned e) {
    if (e == 0) throw std::invalid_argument("zeroth root");
    if (f.is_zero()) return Poly();
    if (f.degree() % static_cast<int>(e) != 0) return std::nullopt;
    auto unit_root = rational_root_of(f.lc(), e);
    if (!unit_root) return std::nullopt;
    if (f.is_constant()) return Poly(*unit_root);
    SquarefreePart sf = squarefree_decomposition(f);
    Poly h(*unit_root);
    for (const auto& [base, mult] : sf.factors) {
        if (mult % static_cast<int>(e) != 0) return std::nullopt;
        h = h * base.pow(static_cast<unsigned>(mult / static_cast<int>(e)));
    }
    if (h.pow(e) != f) return std::nullopt;
    return h;
}

}  // namespace polydec
