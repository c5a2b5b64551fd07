#include "polydec/iterates.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polydec/decompose.hpp"
#include "polydec/enumerate.hpp"
#include "polydec/forms.hpp"

namespace polydec {

namespace {

std::vector<int> divisors(int n) {
    std::vector<int> lo, hi;
    for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

long long checked_pow(int n, int e, int coeff_cap) {
    long long total = 1;
    for (int t = 0; t < e; ++t) {
        total *= n;
        if (total + 1 > coeff_cap) throw std::length_error("iterate size cap exceeded");
    }
    return total;
}

IterateSplit reduce_against(const Poly& f, const Poly& F, const Poly& a, const Poly& b,
                            int e) {
    if (compose(a, b) != F) throw std::invalid_argument("split does not compose to the iterate");
    const int n = f.degree();
    IterateSplit out;
    out.a = a;
    out.b = b;
    long long da = a.degree(), db = b.degree(), pw = n;
    while (da % pw == 0) {
        pw *= n;
        ++out.i;
    }
    pw = n;
    while (db % pw == 0) {
        pw *= n;
        ++out.j;
    }
    out.k = e - out.i - out.j;

    if (out.i == 0) {
        out.a_hat = a;
    } else {
        auto ah = left_divide(a, iterate(f, static_cast<unsigned>(out.i)));
        if (!ah) throw std::logic_error("iterate does not divide the left side");
        out.a_hat = *ah;
    }

    if (out.j == 0) {
        out.b_hat = b;
    } else {
        Poly fj = iterate(f, static_cast<unsigned>(out.j));
        if (b.degree() == fj.degree()) {
            auto mu = solve_outer_linear(fj, b);
            if (!mu) throw std::logic_error("iterate does not divide the right side");
            out.b_hat = mu->to_poly();
        } else {
            auto rf = right_factor(b, fj.degree());
            if (!rf) throw std::logic_error("iterate does not divide the right side");
            auto mu = solve_outer_linear(rf->second, fj);  // mu ∘ canonical = f^(j)
            if (!mu) throw std::logic_error("iterate does not divide the right side");
            out.b_hat = rcomp(rf->first, mu->inverse());
        }
    }

    // f^(i)∘(â∘b̂) = f^(i)∘f^(k), so the two agree up to a linear that
    // composes trivially with f^(i); fold it into â.
    Poly mid = compose(out.a_hat, out.b_hat);
    Poly fk = iterate(f, static_cast<unsigned>(out.k));
    if (mid != fk) {
        auto lam = solve_outer_linear(fk, mid);  // mid = lam ∘ f^(k)
        if (!lam) throw std::logic_error("split reduction failed");
        out.a_hat = lcomp(lam->inverse(), out.a_hat);
        if (compose(out.a_hat, out.b_hat) != fk) throw std::logic_error("split reduction failed");
    }
    if (compose(iterate(f, static_cast<unsigned>(out.i)), out.a_hat) != a ||
        compose(out.b_hat, iterate(f, static_cast<unsigned>(out.j))) != b)
        throw std::logic_error("split reduction failed");
    return out;
}

}  // namespace

std::vector<std::pair<Poly, Poly>> split_iterate(const Poly& f, int e, int coeff_cap) {
    if (f.degree() < 2 || e < 1) throw std::invalid_argument("need deg >= 2 and e >= 1");
    checked_pow(f.degree(), e, coeff_cap);
    Poly F = iterate(f, static_cast<unsigned>(e));
    std::vector<std::pair<Poly, Poly>> out;
    for (int d : divisors(F.degree())) {
        if (d == 1) {
            out.emplace_back(F, Poly::X());
        } else if (d == F.degree()) {
            out.emplace_back(Poly::X(), F);
        } else if (auto rf = right_factor(F, d)) {
            out.push_back(*rf);
        }
    }
    return out;
}

IterateSplit reduce_split(const Poly& f, const Poly& a, const Poly& b, int e) {
    if (f.degree() < 2 || e < 1) throw std::invalid_argument("need deg >= 2 and e >= 1");
    return reduce_against(f, iterate(f, static_cast<unsigned>(e)), a, b, e);
}

bool is_conjugate_power(const Poly& f) {
    FormReport r = detect_cyclic(f);
    return r.tag == FormTag::Cyclic && r.cyclic->beta == r.cyclic->v;
}

bool is_conjugate_chebyshev(const Poly& f) {
    const int n = f.degree();
    if (n == 2) {
        CyclicWitness w = *detect_cyclic(f).cyclic;
        return w.v == w.beta - Rational(2) / w.c;
    }
    FormReport r = detect_dihedral(f);
    if (r.tag != FormTag::Dihedral) return false;
    const DihedralWitness& w = *r.dihedral;
    if (w.shift != w.beta) return false;
    // the conjugating linear must invert the inner scaling: p^2 alpha^2 = 1
    if (n % 2) return w.scale * w.scale == 1;
    return w.scale * w.scale * w.alpha_sq == 1;
}

bool in_exchange_family(const Poly& u) {
    if (u.degree() < 2) return false;
    if (detect_cyclic(u).tag == FormTag::Cyclic) return true;
    FormReport inner = detect_twist_inner(u);
    if (inner.tag == FormTag::TwistInner && inner.n >= 2 && inner.s >= 1 &&
        std::gcd(inner.s, inner.n) == 1)
        return true;
    for (int n = 2; n <= u.degree(); ++n)
        if (detect_twist_outer(u, n).tag == FormTag::TwistOuter) return true;
    return false;
}

IterateBoundReport iterates_bound_check(const Poly& f, int e, int coeff_cap) {
    const int n = f.degree();
    if (n < 2 || e < 1) throw std::invalid_argument("need deg >= 2 and e >= 1");
    if (is_conjugate_power(f)) throw std::invalid_argument("f is conjugate to a power");
    if (is_conjugate_chebyshev(f))
        throw std::invalid_argument("f is conjugate to a Chebyshev polynomial");
    IterateBoundReport rep;
    rep.n = n;
    rep.e = e;
    for (int ee = 1; ee <= e; ++ee) {
        Poly F = iterate(f, static_cast<unsigned>(ee));
        for (const auto& [a, b] : split_iterate(f, ee, coeff_cap)) {
            IterateSplit s = reduce_against(f, F, a, b, ee);
            ++rep.split_count;
            if (rep.split_count == 1 || s.k > rep.max_k) {
                rep.max_k = s.k;
                rep.extremal = s;
                rep.extremal_e = ee;
            }
        }
    }
    rep.ok = (1LL << rep.max_k) <= n + 2 && (n == 6 || (1LL << rep.max_k) <= n);
    return rep;
}

DoublingFamily doubling_family(int m, int coeff_cap) {
    if (m < 1) throw std::invalid_argument("need m >= 1");
    checked_pow((1 << (m + 1)) + 2, m + 1, coeff_cap);
    DoublingFamily out;
    for (int i = m; i >= 0; --i) {
        Poly base = Poly::monomial(1 << i) + Poly(Rational(1));
        out.chain.push_back(Poly::X() * base.pow(1u << (m - i)));
    }
    out.f = compose(out.chain.front(), Poly::monomial(2));
    out.a = compose(out.chain);
    out.b = Poly::monomial(1 << (m + 1));
    out.ladder_checks = true;
    Poly sq = Poly::monomial(2);
    for (int i = 1; i <= m; ++i) {
        const Poly& fi = out.chain[static_cast<size_t>(m - i)];
        const Poly& fprev = out.chain[static_cast<size_t>(m - i + 1)];
        if (compose(sq, fi) != compose(fprev, sq)) out.ladder_checks = false;
    }
    if (compose(out.a, out.b) != iterate(out.f, static_cast<unsigned>(m) + 1))
        out.ladder_checks = false;
    return out;
}

namespace {

// complete decomposition of f^(k) obtained by repeating one of f
Decomposition repeat_decomposition(const Decomposition& U, int k) {
    std::vector<Poly> chain;
    for (int t = 0; t < k; ++t) {
        if (t > 0) chain.push_back(U.leading.to_poly());
        chain.insert(chain.end(), U.factors.begin(), U.factors.end());
    }
    return canonicalize(U.leading, std::move(chain));
}

// complete decomposition of a∘b refining the split
Decomposition refine_pair(const Poly& a, const Poly& b) {
    Linear lead;
    std::vector<Poly> chain;
    if (a.degree() >= 2) {
        Decomposition da = complete_decomposition(a);
        lead = da.leading;
        chain = da.factors;
    } else {
        lead = Linear(a.coeff(1), a.coeff(0));
    }
    if (b.degree() >= 2) {
        Decomposition db = complete_decomposition(b);
        chain.push_back(db.leading.to_poly());
        chain.insert(chain.end(), db.factors.begin(), db.factors.end());
    } else {
        chain.push_back(b);
    }
    return canonicalize(lead, std::move(chain));
}

}  // namespace

IterateChainReport iterate_chain_check(const Poly& f, int e, int coeff_cap) {
    const int n = f.degree();
    if (n < 2 || e < 1) throw std::invalid_argument("need deg >= 2 and e >= 1");
    IterateChainReport rep;
    rep.e = e;
    Decomposition U = complete_decomposition(f);
    const size_t r = U.factors.size();
    std::vector<bool> cyc(r), dih(r), inz(r);
    for (size_t i = 0; i < r; ++i) {
        const Poly& u = U.factors[i];
        cyc[i] = detect_cyclic(u).tag == FormTag::Cyclic;
        dih[i] = u.degree() >= 3 && detect_dihedral(u).tag == FormTag::Dihedral;
        inz[i] = in_exchange_family(u);
    }
    bool all_cyclic = std::find(cyc.begin(), cyc.end(), false) == cyc.end();
    bool conj_pow = is_conjugate_power(f);
    bool conj_cheb = is_conjugate_chebyshev(f);
    bool any_outside = std::find(inz.begin(), inz.end(), false) != inz.end();

    auto fail = [&rep](int clause, int factor, int k) {
        rep.ok = false;
        rep.violations.push_back("clause " + std::to_string(clause) + " fails at factor " +
                                 std::to_string(factor + 1) + " (k=" + std::to_string(k) + ")");
    };

    Poly F = iterate(f, static_cast<unsigned>(e));
    for (const auto& [a, b] : split_iterate(f, e, coeff_cap)) {
        IterateSplit s = reduce_against(f, F, a, b, e);
        if (s.k <= 1) continue;
        ++rep.splits_checked;
        if (s.k > rep.k_max) rep.k_max = s.k;
        const int k = s.k;

        for (size_t i = 0; i < r; ++i) {
            if (cyc[i] || dih[i]) continue;
            const int du = U.factors[i].degree();
            bool wide = n >= 6 * du && du >= (1 << (k - 2)) + 1;
            bool tight = n >= 2 * du && 2 * du >= (1 << k) + 2;
            if (!wide && !tight) fail(2, static_cast<int>(i), k);
        }
        if (k > 3 && !conj_cheb)
            for (size_t i = 0; i < r; ++i)
                if (dih[i]) fail(3, static_cast<int>(i), k);
        if (k > 2 && all_cyclic && !conj_pow) fail(4, 0, k);

        if (any_outside) {
            Decomposition Uk = repeat_decomposition(U, k);
            Decomposition V = refine_pair(s.a_hat, s.b_hat);
            for (size_t i = 0; i < r; ++i) {
                if (inz[i]) continue;
                for (int t = 0; t < k; ++t) {
                    int pos = t * static_cast<int>(r) + static_cast<int>(i) + 1;
                    QuadrantProducts q = quadrants(Uk, V, pos, pos);
                    if (q.LR > 2 || q.RL > 2) fail(1, static_cast<int>(i), k);
                }
            }
        }
    }
    return rep;
}

}  // namespace polydec
