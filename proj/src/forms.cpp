#include "polydec/forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polydec/chebyshev.hpp"
#include "polydec/poly_algebra.hpp"

namespace polydec {

namespace {

// f composed with X + t
Poly shift_arg(const Poly& f, const Rational& t) {
    if (t == 0) return f;
    return rcomp(f, Linear(Rational(1), t));
}

Rational center_of(const Poly& f) {
    int n = f.degree();
    return -f.coeff(n - 1) / (Rational(n) * f.lc());
}

std::vector<int> multiplicity_pattern(const Poly& p) {
    std::vector<int> pat;
    for (const auto& [base, mult] : squarefree_decomposition(p).factors)
        for (int i = 0; i < base.degree(); ++i) pat.push_back(mult);
    std::sort(pat.begin(), pat.end());
    return pat;
}

}  // namespace

RamProfile ram_profile(const Poly& f) {
    if (f.degree() < 2) throw std::invalid_argument("ram_profile needs degree >= 2");
    Poly branch = resultant_in_t(f);
    RamProfile out;
    out.branch_count = squarefree_part(branch).degree();
    out.all_simple_ramification = is_squarefree(derivative(f));
    for (const Rational& c : rational_roots(branch))
        out.rational_branch_data.emplace_back(c, multiplicity_pattern(f - Poly(c)));
    return out;
}

FormReport detect_cyclic(const Poly& f) {
    if (f.degree() < 2) throw std::invalid_argument("detect_cyclic needs degree >= 2");
    FormReport rep;
    Poly sf = squarefree_part(derivative(f));
    if (sf.degree() != 1) return rep;
    int n = f.degree();
    Rational beta = -sf.coeff(0) / sf.coeff(1);
    Rational c = f.lc();
    Rational v = f.eval(beta);
    Poly probe = Poly::X() - Poly(beta);
    if (probe.pow(static_cast<unsigned>(n)) * c + Poly(v) != f) return rep;
    rep.tag = FormTag::Cyclic;
    rep.n = n;
    rep.cyclic = CyclicWitness{beta, c, v};
    return rep;
}

Poly dihedral_witness_poly(const DihedralWitness& w, int n) {
    // p t_e a^e (X-b)^e with a^e folded into scale * alpha_sq^{(e - n mod 2)/2}
    const Poly& t = chebyshev(n);
    Poly base = Poly::X() - Poly(w.beta);
    Poly base2 = base * base;
    Poly bpow = (n % 2) ? base : Poly(Rational(1));
    Rational apow(1);
    Poly acc(w.shift);
    for (int e = n % 2; e <= n; e += 2) {
        if (t.coeff(e) != 0) acc += bpow * (w.scale * t.coeff(e) * apow);
        if (e + 2 <= n) {
            bpow = bpow * base2;
            apow *= w.alpha_sq;
        }
    }
    return acc;
}

FormReport detect_dihedral(const Poly& f) {
    if (f.degree() < 3) throw std::invalid_argument("detect_dihedral needs degree >= 3");
    FormReport rep;
    if (!is_squarefree(derivative(f))) return rep;
    if (squarefree_part(resultant_in_t(f)).degree() != 2) return rep;
    int n = f.degree();
    Rational beta = center_of(f);
    Poly fc = shift_arg(f, beta);
    if (fc.coeff(n - 2) == 0) return rep;
    // leading terms p a^n X^n + p a^{n-2} (-n) X^{n-2} of p T_n(aX) fix a^2
    Rational A = -Rational(n) * fc.lc() / fc.coeff(n - 2);
    DihedralWitness w;
    w.beta = beta;
    w.alpha_sq = A;
    Rational apow(1);
    for (int i = 0; i < (n - n % 2) / 2; ++i) apow *= A;
    w.scale = fc.lc() / apow;  // p a^{n mod 2} = lc / a^{2 floor(n/2)}
    w.shift = fc.coeff(0) - w.scale * (n % 2 ? Rational(0) : chebyshev(n).coeff(0));
    if (dihedral_witness_poly(w, n) != f) return rep;
    rep.tag = FormTag::Dihedral;
    rep.n = n;
    rep.dihedral = w;
    return rep;
}

GammaResult gamma_symmetry_order(const Poly& f) {
    if (f.degree() < 2) throw std::invalid_argument("symmetry order needs degree >= 2");
    GammaResult res;
    Rational t = center_of(f);
    Poly fc = shift_arg(f, t);
    Rational inv_lc = rational_inverse(fc.lc());
    res.l2 = Linear(Rational(1), t);
    res.l1 = Linear(inv_lc, -fc.coeff(0) * inv_lc);
    res.normalized = lcomp(res.l1, fc);
    int n = f.degree();
    int g = 0;
    for (int e = 1; e < n; ++e)
        if (res.normalized.coeff(e) != 0) g = std::gcd(g, n - e);
    if (g == 0) {
        res.infinite = true;
        res.order = 0;
    } else {
        res.order = g;
    }
    return res;
}

int gamma0_isometry_order(const Poly& f) {
    GammaResult res = gamma_symmetry_order(f);
    int g = f.degree();
    for (int e = 1; e < f.degree(); ++e)
        if (res.normalized.coeff(e) != 0) g = std::gcd(g, e);
    return g;
}

FormReport detect_twist_inner(const Poly& f) {
    GammaResult res = gamma_symmetry_order(f);
    FormReport rep;
    if (res.infinite) {
        rep.tag = FormTag::TwistInner;
        rep.n = f.degree();
        rep.s = 0;
        rep.twist_inner = TwistInnerWitness{res.l1, res.l2, Poly::X()};
        return rep;
    }
    if (res.order == 1) return rep;
    int n = res.order;
    int s = 0;
    while (res.normalized.coeff(s) == 0) ++s;
    std::vector<Rational> h(static_cast<size_t>((res.normalized.degree() - s) / n) + 1,
                            Rational(0));
    for (int e = s; e <= res.normalized.degree(); e += n) h[(e - s) / n] = res.normalized.coeff(e);
    rep.tag = FormTag::TwistInner;
    rep.n = n;
    rep.s = s;
    rep.twist_inner = TwistInnerWitness{res.l1, res.l2, Poly(std::move(h))};
    return rep;
}

FormReport detect_twist_outer(const Poly& f, int n) {
    if (n < 2) throw std::invalid_argument("twist order must exceed 1");
    if (f.degree() < 2) throw std::invalid_argument("detect_twist_outer needs degree >= 2");
    FormReport rep;
    std::vector<Rational> points = rational_roots(resultant_in_t(f));
    // deterministic witness choice: smallest branch point by absolute value
    std::sort(points.begin(), points.end(), [](const Rational& a, const Rational& b) {
        int c = cmp(abs(a), abs(b));
        return c != 0 ? c < 0 : a < b;
    });
    for (const Rational& c0 : points) {
        SquarefreePart sf = squarefree_decomposition(f - Poly(c0));
        int exceptional = 0, s = 0;
        Poly exceptional_base;
        for (const auto& [base, mult] : sf.factors)
            if (mult % n != 0) {
                exceptional += base.degree();
                s = mult;
                exceptional_base = base;
            }
        if (exceptional != 1 || std::gcd(s, n) != 1) continue;
        Rational beta = -exceptional_base.coeff(0) / exceptional_base.coeff(1);
        Poly lin = Poly::X() - Poly(beta);
        Poly rest = exact_div(f - Poly(c0), lin.pow(static_cast<unsigned>(s)));
        Rational scale = rest.lc();
        auto H = poly_nth_root(rest / scale, static_cast<unsigned>(n));
        if (!H) continue;
        rep.tag = FormTag::TwistOuter;
        rep.n = n;
        rep.s = s;
        rep.twist_outer = TwistOuterWitness{c0, beta, scale, *H};
        return rep;
    }
    return rep;
}

Poly CanonicalTwistForm::reconstruct() const {
    int q = 1;
    for (const auto& root : q_list) q *= root.q;
    Poly out = residual.pow(static_cast<unsigned>(m * q));
    for (const auto& root : q_list) {
        Poly lin = Poly::X() - Poly(root.beta);
        out = out * lin.pow(static_cast<unsigned>(m * root.r * q / root.q));
    }
    return out;
}

CanonicalTwistForm canonical_twist_form(const Poly& f) {
    if (f.degree() < 2) throw std::invalid_argument("canonical form needs degree >= 2");
    if (detect_cyclic(f).tag == FormTag::Cyclic)
        throw std::invalid_argument("cyclic input excluded");
    if (f.degree() >= 3 && detect_dihedral(f).tag == FormTag::Dihedral)
        throw std::invalid_argument("dihedral input excluded");

    SquarefreePart sf = squarefree_decomposition(f);
    if (sf.factors.empty()) throw std::runtime_error("unsupported: no rational root data");
    int m = 0;
    for (const auto& [base, mult] : sf.factors) m = std::gcd(m, mult);

    // reduced multiplicities, one entry per root (bases collect conjugates)
    struct RootClass {
        Poly base;
        int count;  // number of roots in the class
        int e;
    };
    std::vector<RootClass> classes;
    bool any_rational_root = false;
    for (const auto& [base, mult] : sf.factors) {
        classes.push_back({base, base.degree(), mult / m});
        if (base.degree() == 1) any_rational_root = true;
        else if (!rational_roots(base).empty()) any_rational_root = true;
    }
    if (!any_rational_root) throw std::runtime_error("unsupported: no rational root");

    CanonicalTwistForm out;
    out.m = m;
    std::vector<int> dist_e;
    for (size_t i = 0; i < classes.size(); ++i) {
        // gcd of reduced multiplicities over every other root
        int g = classes[i].count >= 2 ? classes[i].e : 0;
        for (size_t j = 0; j < classes.size(); ++j)
            if (j != i) g = std::gcd(g, classes[j].e);
        if (g <= 1) continue;
        if (classes[i].base.degree() != 1 || classes[i].count != 1)
            throw std::runtime_error("unsupported: irrational distinguished root");
        out.q_list.push_back(
            {-classes[i].base.coeff(0) / classes[i].base.coeff(1), g, classes[i].e});
        dist_e.push_back(classes[i].e);
    }
    int q = 1;
    for (auto& root : out.q_list) {
        if (std::gcd(q, root.q) != 1) throw std::runtime_error("unsupported: entangled roots");
        q *= root.q;
    }
    for (size_t i = 0; i < out.q_list.size(); ++i) {
        if (dist_e[i] * out.q_list[i].q % q != 0)
            throw std::runtime_error("unsupported: multiplicity mismatch");
        out.q_list[i].r = dist_e[i] * out.q_list[i].q / q;
    }
    std::sort(out.q_list.begin(), out.q_list.end(),
              [](const auto& a, const auto& b) { return a.beta < b.beta; });

    Poly rest = f;
    for (const auto& root : out.q_list) {
        Poly lin = Poly::X() - Poly(root.beta);
        rest = exact_div(rest, lin.pow(static_cast<unsigned>(m * root.r * q / root.q)));
    }
    auto lead = rational_root_of(rest.lc(), static_cast<unsigned>(m * q));
    if (!lead) throw std::runtime_error("unsupported: leading coefficient not a power");
    if (rest.degree() == 0) {
        out.residual = Poly(*lead);
    } else {
        auto root = poly_nth_root(rest / rest.lc(), static_cast<unsigned>(m * q));
        if (!root) throw std::runtime_error("unsupported: residual not a power");
        out.residual = *root * *lead;
    }
    if (out.reconstruct() != f) throw std::runtime_error("unsupported: reconstruction failed");
    return out;
}

std::optional<EvenPartSplit> even_part_split(const Poly& f, const Poly& g, int n) {
    if (n < 2) throw std::invalid_argument("modulus must exceed 1");
    Poly F = compose(f, g);
    for (int e = 0; e <= F.degree(); ++e)
        if (F.coeff(e) != 0 && e % n != 0) return std::nullopt;

    Rational c = g.coeff(0);
    Poly gs = g - Poly(c);
    if (gs.is_zero()) return std::nullopt;
    int s = 0;
    while (gs.coeff(s) == 0) ++s;
    for (int e = s; e <= gs.degree(); ++e)
        if (gs.coeff(e) != 0 && (e - s) % n != 0) return std::nullopt;
    std::vector<Rational> gh(static_cast<size_t>((gs.degree() - s) / n) + 1, Rational(0));
    for (int e = s; e <= gs.degree(); e += n) gh[(e - s) / n] = gs.coeff(e);

    int np = n / std::gcd(n, s);
    Poly fl = shift_arg(f, c);
    std::vector<Rational> fh(static_cast<size_t>(fl.degree() / np) + 1, Rational(0));
    for (int e = 0; e <= fl.degree(); ++e) {
        if (fl.coeff(e) == 0) continue;
        if (e % np != 0) return std::nullopt;
        fh[e / np] = fl.coeff(e);
    }
    EvenPartSplit out;
    out.f_hat = Poly(std::move(fh));
    out.g_hat = Poly(std::move(gh));
    out.l = Linear(Rational(1), c);
    out.s = s;
    return out;
}

}  // namespace polydec
