#include "polydec/ritt.hpp"

#include <numeric>
#include <stdexcept>

#include "polydec/chebyshev.hpp"
#include "polydec/forms.hpp"
#include "polydec/poly_algebra.hpp"

namespace polydec {

namespace {

Poly spread(const Poly& f, int n) { return compose(f, Poly::monomial(n)); }

// u = first ∘ T_n ∘ second with rational linears, when possible
std::optional<std::pair<Linear, Linear>> cheb_conjugation(const Poly& u, int n) {
    if (u.degree() != n) return std::nullopt;
    if (n == 2) {
        Rational t = -u.coeff(1) / (Rational(2) * u.lc());
        Poly uc = rcomp(u, Linear(Rational(1), t));
        return std::make_pair(Linear(u.lc(), uc.coeff(0) + Rational(2) * u.lc()),
                              Linear(Rational(1), -t));
    }
    FormReport rep = detect_dihedral(u);
    if (rep.tag != FormTag::Dihedral) return std::nullopt;
    auto alpha = rational_root_of(rep.dihedral->alpha_sq, 2);
    if (!alpha) return std::nullopt;
    Rational p = rep.dihedral->scale;
    if (n % 2) p /= *alpha;
    return std::make_pair(Linear(p, rep.dihedral->shift),
                          Linear(*alpha, -*alpha * rep.dihedral->beta));
}

// MA∘inner = eps (T_m ∘ LB)
std::optional<std::pair<Linear, int>> solve_cheb_inner(int m, const Poly& w) {
    if (auto l = solve_inner_linear(chebyshev(m), w)) return std::make_pair(*l, 1);
    if (auto l = solve_inner_linear(chebyshev(m), w * Rational(-1))) return std::make_pair(*l, -1);
    return std::nullopt;
}

bool cheb_shaped(const Poly& u) {
    if (u.degree() <= 2) return true;
    return detect_dihedral(u).tag == FormTag::Dihedral;
}

}  // namespace

RittMove ritt_move_exponential(int n, int s, const Poly& h) {
    if (n < 2) throw std::invalid_argument("outer power degree must exceed 1");
    if (s < 0) throw std::invalid_argument("negative twist exponent");
    if (s > 0 && std::gcd(s, n) != 1) throw std::invalid_argument("twist exponent not coprime");
    if (h.is_zero()) throw std::invalid_argument("zero twist polynomial");
    if (!h.is_constant() && h.coeff(0) == 0)
        throw std::invalid_argument("twist polynomial divisible by X");
    RittMove mv;
    Poly inner = Poly::monomial(s) * spread(h, n);
    Poly outer = Poly::monomial(s) * h.pow(static_cast<unsigned>(n));
    mv.quad = {Poly::monomial(n), inner, outer, Poly::monomial(n)};
    mv.lhs = compose(mv.quad[0], mv.quad[1]);
    mv.rhs = compose(mv.quad[2], mv.quad[3]);
    if (mv.lhs != mv.rhs) throw std::logic_error("move identity failed");
    return mv;
}

std::pair<Poly, Poly> ritt_move_chebyshev(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("chebyshev indices must be positive");
    Poly lhs = compose(chebyshev(n), chebyshev(m));
    Poly rhs = compose(chebyshev(m), chebyshev(n));
    if (lhs != rhs || lhs != chebyshev(n * m)) throw std::logic_error("move identity failed");
    return {lhs, rhs};
}

std::array<Poly, 4> dihedral_move(int n, int m, int eps) {
    if (n <= 2) throw std::invalid_argument("degree must exceed 2");
    if (eps != 1 && eps != -1) throw std::invalid_argument("sign must be +-1");
    if (std::gcd(n, m) != 1) throw std::invalid_argument("degrees not coprime");
    Rational en(n % 2 == 0 ? 1 : eps);  // eps^n
    std::array<Poly, 4> quad = {chebyshev(m) * en, chebyshev(n), chebyshev(n),
                                chebyshev(m) * Rational(eps)};
    if (compose(quad[0], quad[1]) != compose(quad[2], quad[3]))
        throw std::logic_error("move identity failed");
    return quad;
}

Ritt2Classification classify_ritt(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
    if (compose(a, b) != compose(c, d)) throw std::invalid_argument("compositions differ");
    Ritt2Classification out;

    if (a.degree() == c.degree()) {
        out.kind = RittKind::TrivialLinear;
        out.n = a.degree();
        out.m = b.degree();
        Linear lb(b.lc(), b.coeff(0)), ld(d.lc(), d.coeff(0));
        Poly b0 = lcomp(lb.inverse(), b);
        if (lcomp(ld.inverse(), d) != b0) throw std::logic_error("right factor mismatch");
        Linear link = ld.after(lb.inverse());
        if (rcomp(c, link) != a || lcomp(link, b) != d)
            throw std::logic_error("connecting linear failed");
        out.link = link;
        return out;
    }

    GcdSplit sp = gcd_split(a, b, c, d);
    out.g_left = sp.g;
    out.h_right = sp.h;
    out.a_hat = sp.a_hat;
    out.b_hat = sp.b_hat;
    out.c_hat = sp.c_hat;
    out.d_hat = sp.d_hat;
    int n = sp.a_hat.degree(), m = sp.b_hat.degree();
    out.n = n;
    out.m = m;
    if (n == 1 || m == 1) {
        // the relation is a re-association across the split, not an exchange
        out.kind = RittKind::TrivialLinear;
        return out;
    }

    // full rational Chebyshev witness first
    if (auto ca = cheb_conjugation(sp.a_hat, n)) {
        if (auto cb = solve_cheb_inner(m, lcomp(ca->second, sp.b_hat))) {
            if (auto cc = cheb_conjugation(sp.c_hat, m)) {
                if (auto cd = solve_cheb_inner(n, lcomp(cc->second, sp.d_hat))) {
                    out.kind = RittKind::ChebyshevType;
                    out.eps_b = cb->second;
                    out.eps_d = cd->second;
                    out.linears = {ca->first, ca->second, cb->first,
                                   cc->first, cc->second, cd->first};
                    return out;
                }
            }
        }
    }

    // exponential shape: a cyclic outer on one side, a cyclic inner on the other
    FormReport ra = detect_cyclic(sp.a_hat);
    FormReport rd = detect_cyclic(sp.d_hat);
    Poly ah = sp.a_hat, bh = sp.b_hat, ch = sp.c_hat, dh = sp.d_hat;
    if (ra.tag != FormTag::Cyclic || rd.tag != FormTag::Cyclic) {
        ra = detect_cyclic(sp.c_hat);
        rd = detect_cyclic(sp.b_hat);
        if (ra.tag == FormTag::Cyclic && rd.tag == FormTag::Cyclic) {
            out.swapped = true;
            ah = sp.c_hat;
            bh = sp.d_hat;
            ch = sp.a_hat;
            dh = sp.b_hat;
            std::swap(n, m);
            out.n = n;
            out.m = m;
        } else {
            ra.tag = FormTag::None;
        }
    }
    if (ra.tag == FormTag::Cyclic) {
        Linear l1(rational_inverse(ra.cyclic->c), -ra.cyclic->v / ra.cyclic->c);
        Linear l2(Rational(1), -ra.cyclic->beta);
        Linear l3(rational_inverse(rd.cyclic->c), -rd.cyclic->v / rd.cyclic->c);
        Linear l4(Rational(1), -rd.cyclic->beta);
        Poly bp = rcomp(lcomp(l2, bh), l4.inverse());
        int s = -1;
        bool shaped = bp.coeff(0) == 0;
        for (int e = 0; e <= bp.degree() && shaped; ++e) {
            if (bp.coeff(e) == 0) continue;
            if (s < 0) s = e;
            else if ((e - s) % n != 0) shaped = false;
        }
        if (shaped && s >= 1 && std::gcd(s, n) == 1) {
            std::vector<Rational> hc(static_cast<size_t>((bp.degree() - s) / n) + 1, Rational(0));
            for (int e = s; e <= bp.degree(); e += n) hc[(e - s) / n] = bp.coeff(e);
            Poly h(std::move(hc));
            Poly cc = lcomp(l1, rcomp(ch, l3.inverse()));
            if (Poly::monomial(s) * h.pow(static_cast<unsigned>(n)) == cc) {
                out.kind = RittKind::ExponentialType;
                out.s = s;
                out.h = h;
                out.linears = {l1, l2, l3, l4};
                return out;
            }
        }
    }

    // kind is still determined by the ramification profiles even when the
    // conjugating linears live in a quadratic extension
    if (cheb_shaped(sp.a_hat) && cheb_shaped(sp.b_hat) && cheb_shaped(sp.c_hat) &&
        cheb_shaped(sp.d_hat)) {
        out.kind = RittKind::ChebyshevType;
        out.witness_supported = false;
        return out;
    }
    throw std::runtime_error("unsupported: no rational classification witness");
}

std::vector<std::pair<Poly, Poly>> ritt_neighbors_of_pair(const Poly& u, const Poly& v) {
    if (!is_indecomposable(u) || !is_indecomposable(v))
        throw std::invalid_argument("factors must be indecomposable");
    std::vector<std::pair<Poly, Poly>> out;
    if (std::gcd(u.degree(), v.degree()) != 1) return out;
    Poly f = compose(u, v);
    auto rf = right_factor(f, u.degree());
    if (!rf) return out;
    if (!is_indecomposable(rf->first) || !is_indecomposable(rf->second)) return out;
    out.emplace_back(rf->first, rf->second);
    return out;
}

}  // namespace polydec
