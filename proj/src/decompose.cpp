#include "polydec/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "polydec/poly_algebra.hpp"

namespace polydec {

Poly Decomposition::recompose() const {
    return lcomp(leading, compose(factors));
}

std::vector<int> Decomposition::degree_sequence() const {
    std::vector<int> out;
    out.reserve(factors.size());
    for (const Poly& f : factors) out.push_back(f.degree());
    return out;
}

std::vector<int> proper_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d < n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

Decomposition canonicalize(Linear leading, std::vector<Poly> factors) {
    for (size_t idx = factors.size(); idx-- > 0;) {
        Poly& v = factors[idx];
        if (v.degree() < 1) throw std::invalid_argument("constant factor in decomposition");
        Linear li(v.lc(), v.constant_term());
        v = (v - Poly(li.shift)) / li.scale;
        if (!li.is_identity()) {
            if (idx > 0) factors[idx - 1] = rcomp(factors[idx - 1], li);
            else leading = leading.after(li);
        }
    }
    // after the pass above every factor is monic with zero constant term, so
    // degree-1 factors are exactly X and can be dropped
    std::erase_if(factors, [](const Poly& p) { return p.degree() == 1; });
    return Decomposition{leading, std::move(factors)};
}

std::optional<std::pair<Poly, Poly>> right_factor(const Poly& f, int d) {
    const int n = f.degree();
    if (n < 2 || d <= 1 || d >= n || n % d != 0)
        throw std::invalid_argument("right_factor needs a proper divisor of the degree");
    const int m = n / d;
    const Poly w = f / f.lc();

    // Build the candidate g = X^d + c_{d-1} X^{d-1} + ... + c_1 X coefficient
    // by coefficient: [X^{n-j}] of g^m is linear in c_{d-j} with slope m and
    // otherwise depends only on already-fixed higher coefficients. Work with
    // the coefficient-reversed series truncated to d terms so the cost does
    // not depend on n: [X^{n-j}] g^m = [X^j] rev(g)^m.
    const size_t terms = static_cast<size_t>(d);
    auto trunc_mul = [terms](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(terms, Rational(0));
        for (size_t i = 0; i < a.size() && i < terms; ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size() && i + j < terms; ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };
    auto trunc_pow = [&](std::vector<Rational> base, unsigned e) {
        std::vector<Rational> r(terms, Rational(0));
        r[0] = 1;
        base.resize(terms, Rational(0));
        while (e > 0) {
            if (e & 1u) r = trunc_mul(r, base);
            e >>= 1;
            if (e) base = trunc_mul(base, base);
        }
        return r;
    };
    std::vector<Rational> rev(terms, Rational(0));  // rev(g) = 1 + c_{d-1} X + ...
    rev[0] = 1;
    for (int j = 1; j < d; ++j) {
        std::vector<Rational> t = trunc_pow(rev, static_cast<unsigned>(m));
        rev[static_cast<size_t>(j)] = (w.coeff(n - j) - t[static_cast<size_t>(j)]) / m;
    }
    std::vector<Rational> gc(static_cast<size_t>(d) + 1, Rational(0));
    for (int j = 1; j < d; ++j) gc[static_cast<size_t>(d - j)] = rev[static_cast<size_t>(j)];
    gc.back() = Rational(1);
    Poly g{std::move(gc)};

    auto digits = radix_expand(f, g);
    std::vector<Rational> ac;
    ac.reserve(digits.size());
    for (const Poly& dig : digits) {
        if (dig.degree() > 0) return std::nullopt;
        ac.push_back(dig.constant_term());
    }
    Poly a{std::move(ac)};
    return std::make_pair(std::move(a), std::move(g));
}

bool is_indecomposable(const Poly& f) {
    if (f.degree() < 2) throw std::invalid_argument("indecomposability needs degree >= 2");
    for (int d : proper_divisors(f.degree()))
        if (right_factor(f, d)) return false;
    return true;
}

Decomposition complete_decomposition(const Poly& f) {
    if (f.degree() < 2) throw std::invalid_argument("decomposition needs degree >= 2");
    std::vector<Poly> inner_first;  // rightmost factor first
    Poly rest = f;
    bool split = true;
    while (split) {
        split = false;
        for (int d : proper_divisors(rest.degree())) {
            if (auto rf = right_factor(rest, d)) {
                inner_first.push_back(rf->second);
                rest = rf->first;
                split = true;
                break;
            }
        }
    }
    Linear leading(rest.lc(), rest.constant_term());
    std::vector<Poly> factors{(rest - Poly(leading.shift)) / leading.scale};
    factors.insert(factors.end(), inner_first.rbegin(), inner_first.rend());
    return Decomposition{leading, std::move(factors)};
}

std::optional<Linear> solve_outer_linear(const Poly& c, const Poly& target) {
    if (c.degree() != target.degree() || c.degree() < 1) return std::nullopt;
    Rational alpha = target.lc() / c.lc();
    Rational beta = target.constant_term() - alpha * c.constant_term();
    Linear l(alpha, beta);
    if (lcomp(l, c) == target) return l;
    return std::nullopt;
}

std::optional<Linear> solve_inner_linear(const Poly& c, const Poly& target) {
    const int m = c.degree();
    if (m != target.degree() || m < 1) return std::nullopt;
    if (m == 1) {
        Rational alpha = target.coeff(1) / c.coeff(1);
        Rational beta = (target.constant_term() - c.constant_term()) / c.coeff(1);
        Linear l(alpha, beta);
        if (rcomp(c, l) == target) return l;
        return std::nullopt;
    }
    auto root = rational_root_of(target.lc() / c.lc(), static_cast<unsigned>(m));
    if (!root) return std::nullopt;
    std::vector<Rational> cands{*root};
    if (m % 2 == 0 && *root != 0) cands.push_back(-*root);
    for (const Rational& alpha : cands) {
        if (alpha == 0) continue;
        // [X^{m-1}] c(aX+b) = c_m m a^{m-1} b + c_{m-1} a^{m-1}
        Rational am1(1);
        for (int i = 0; i < m - 1; ++i) am1 *= alpha;
        Rational beta = (target.coeff(m - 1) / am1 - c.coeff(m - 1)) / (Rational(m) * c.lc());
        Linear l(alpha, beta);
        if (rcomp(c, l) == target) return l;
    }
    return std::nullopt;
}

std::optional<Poly> left_divide(const Poly& f, const Poly& c) {
    const int n = f.degree(), m = c.degree();
    if (m < 1 || n < 1 || n % m != 0) throw std::invalid_argument("left_divide degree mismatch");
    if (m == 1) {
        Linear l(c.coeff(1), c.coeff(0));
        return lcomp(l.inverse(), f);
    }
    if (m == n) {
        if (auto l = solve_inner_linear(c, f)) return l->to_poly();
        return std::nullopt;
    }
    const int k = n / m;
    auto rf = right_factor(f, k);
    if (!rf) return std::nullopt;
    const auto& [cof, w] = *rf;
    // f = cof∘w; any degree-k right factor is ℓ∘w, and f = c∘(ℓ∘w) forces c∘ℓ = cof
    if (auto l = solve_inner_linear(c, cof)) return lcomp(*l, w);
    return std::nullopt;
}

std::optional<std::pair<Linear, Linear>> find_equivalence(const Poly& u, const Poly& v) {
    const int m = u.degree();
    if (m != v.degree() || m < 1) return std::nullopt;
    if (m == 1) {
        // v∘l2 can be made X, then l1 = u as a linear
        Linear lv(v.coeff(1), v.coeff(0));
        Linear lu(u.coeff(1), u.coeff(0));
        return std::make_pair(lu.after(lv.inverse()), Linear::identity());
    }
    Rational su = -u.coeff(m - 1) / (Rational(m) * u.lc());
    Rational sv = -v.coeff(m - 1) / (Rational(m) * v.lc());
    Poly uc = rcomp(u, Linear(Rational(1), su));
    Poly vc = rcomp(v, Linear(Rational(1), sv));

    // centered: need p, q, alpha with p*vc(alpha X) + q = uc;
    // for e >= 1 this pins alpha^(m-e) whenever both coefficients are nonzero
    std::vector<Rational> cands;
    long gexp = 0;
    Rational gval(1);
    for (int e = 1; e < m; ++e) {
        bool zu = uc.coeff(e) == 0, zv = vc.coeff(e) == 0;
        if (zu != zv) return std::nullopt;
        if (zu) continue;
        long d = m - e;
        Rational val = (vc.coeff(e) / vc.lc()) * (uc.lc() / uc.coeff(e));
        // maintain a single relation alpha^gexp = gval via the extended gcd
        if (gexp == 0) {
            gexp = d;
            gval = val;
        } else {
            long g0 = gexp, g1 = d, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
            while (g1 != 0) {
                long q = g0 / g1;
                std::tie(g0, g1) = std::make_pair(g1, g0 - q * g1);
                std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
                std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
            }
            auto rpow = [](const Rational& base, long e2) {
                Rational r(1);
                Rational b = e2 < 0 ? rational_inverse(base) : base;
                for (long i = 0; i < std::abs(e2); ++i) r *= b;
                return r;
            };
            gval = rpow(gval, x0) * rpow(val, y0);
            gexp = g0;
        }
    }
    if (gexp == 0) {
        cands.emplace_back(1);  // inner scaling unconstrained (pure powers)
    } else if (auto r = rational_root_of(gval, static_cast<unsigned>(gexp))) {
        cands.push_back(*r);
        if (gexp % 2 == 0 && *r != 0) cands.push_back(-*r);
    }
    for (const Rational& alpha : cands) {
        if (alpha == 0) continue;
        Rational am(1);
        for (int i = 0; i < m; ++i) am *= alpha;
        Rational p = uc.lc() / (vc.lc() * am);
        Rational q = uc.constant_term() - p * vc.constant_term();
        Linear l1(p, q);
        Linear l2(alpha, sv - alpha * su);
        if (lcomp(l1, rcomp(v, l2)) == u) return std::make_pair(l1, l2);
    }
    return std::nullopt;
}

namespace {

// b = cofactor∘h with deg(h) = dh; handles the boundary degrees uniformly
std::pair<Poly, Poly> split_right_at(const Poly& b, int dh) {
    if (dh == 1) return {b, Poly::X()};
    if (dh == b.degree()) {
        Linear l(b.lc(), b.constant_term());
        return {l.to_poly(), (b - Poly(l.shift)) / l.scale};
    }
    auto rf = right_factor(b, dh);
    if (!rf) throw std::logic_error("guaranteed right factor missing");
    return *rf;
}

}  // namespace

GcdSplit gcd_split(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
    Poly f = compose(a, b);
    if (f != compose(c, d)) throw std::invalid_argument("gcd_split: compositions differ");
    const int dg = static_cast<int>(std::gcd(a.degree(), c.degree()));
    const int dh = static_cast<int>(std::gcd(b.degree(), d.degree()));

    auto [b_hat, h] = split_right_at(b, dh);
    auto [d_hat, h2] = split_right_at(d, dh);
    if (h != h2) throw std::logic_error("common right factor mismatch");

    Poly g, a_hat, c_hat;
    if (dg == 1) {
        g = Poly::X();
        a_hat = a;
        c_hat = c;
    } else {
        if (dg == a.degree()) g = a;
        else if (dg == c.degree()) g = c;
        else {
            auto rf = right_factor(f, f.degree() / dg);
            if (!rf) throw std::logic_error("guaranteed left factor missing");
            g = rf->first;
        }
        auto ah = left_divide(a, g), ch = left_divide(c, g);
        if (!ah || !ch) throw std::logic_error("left division by common factor failed");
        a_hat = *ah;
        c_hat = *ch;
    }

    Poly p = compose(a_hat, b_hat), q = compose(c_hat, d_hat);
    if (p != q) {
        // realign within the fibers of g: replace ĉ by ℓ∘ĉ where g∘ℓ = g
        auto l = solve_outer_linear(q, p);
        if (!l || rcomp(g, *l) != g) throw std::logic_error("gcd_split realignment failed");
        c_hat = lcomp(*l, c_hat);
        q = compose(c_hat, d_hat);
        if (p != q) throw std::logic_error("gcd_split core identity failed");
    }

    GcdSplit out{g, a_hat, c_hat, b_hat, d_hat, h};
    if (compose(out.g, out.a_hat) != a || compose(out.g, out.c_hat) != c ||
        compose(out.b_hat, out.h) != b || compose(out.d_hat, out.h) != d)
        throw std::logic_error("gcd_split identity failed");
    return out;
}

bool equivalent_decompositions(const Decomposition& u, const Decomposition& v) {
    Decomposition cu = canonicalize(u.leading, u.factors);
    Decomposition cv = canonicalize(v.leading, v.factors);
    if (cu.factors.size() != cv.factors.size()) return false;
    if (cu.recompose() != cv.recompose()) return false;
    return cu == cv;
}

}  // namespace polydec
