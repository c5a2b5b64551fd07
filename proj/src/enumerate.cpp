#include "polydec/enumerate.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "polydec/poly_algebra.hpp"
#include "polydec/ritt.hpp"

namespace polydec {

namespace {

struct DecompLess {
    bool operator()(const Decomposition& a, const Decomposition& b) const {
        std::vector<int> da = a.degree_sequence(), db = b.degree_sequence();
        if (da != db) return da < db;
        int c = cmp(a.leading.scale, b.leading.scale);
        if (c != 0) return c < 0;
        c = cmp(a.leading.shift, b.leading.shift);
        if (c != 0) return c < 0;
        for (size_t i = 0; i < a.factors.size(); ++i) {
            if (a.factors[i] != b.factors[i]) return a.factors[i] < b.factors[i];
        }
        return false;
    }
};

Poly compose_chain(const std::vector<Poly>& factors, size_t from, size_t to) {
    // factors[from..to) composed left to right; empty range is the identity
    Poly acc = Poly::X();
    for (size_t i = to; i > from; --i) acc = compose(factors[i - 1], acc);
    return acc;
}

// L = outer∘inner with deg(inner) = d, inner monic with zero constant term
std::pair<Poly, Poly> peel_right(const Poly& L, int d, int identity_index) {
    if (d == L.degree()) {
        Linear l(L.lc(), L.coeff(0));
        return {l.to_poly(), lcomp(l.inverse(), L)};
    }
    if (d == 1) return {L, Poly::X()};
    auto rf = right_factor(L, d);
    if (!rf)
        throw std::runtime_error("crossing witness: identity " +
                                 std::to_string(identity_index) + " construction failed");
    return {rf->first, rf->second};
}

}  // namespace

std::vector<Decomposition> all_classes(const Poly& f, size_t visit_cap) {
    if (f.degree() < 2) throw std::invalid_argument("all_classes needs degree >= 2");
    std::set<Decomposition, DecompLess> seen;
    std::deque<Decomposition> frontier;
    Decomposition start = complete_decomposition(f);
    seen.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        if (visit_cap != 0 && seen.size() >= visit_cap) break;
        Decomposition cur = frontier.front();
        frontier.pop_front();
        for (size_t i = 0; i + 1 < cur.factors.size(); ++i) {
            for (const auto& [c, d] : ritt_neighbors_of_pair(cur.factors[i], cur.factors[i + 1])) {
                std::vector<Poly> next = cur.factors;
                next[i] = c;
                next[i + 1] = d;
                Decomposition cand = canonicalize(cur.leading, std::move(next));
                if (seen.insert(cand).second) frontier.push_back(cand);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

SigmaMatch sigma_match(const Decomposition& U, const Decomposition& V) {
    if (U.recompose() != V.recompose())
        throw std::invalid_argument("decompositions have different targets");
    if (U.factors.size() != V.factors.size())
        throw std::invalid_argument("decompositions have different lengths");
    SigmaMatch out;
    size_t r = U.factors.size();
    std::vector<bool> used(r, false);
    for (size_t i = 0; i < r; ++i) {
        out.source_degrees.push_back(U.factors[i].degree());
        out.target_degrees.push_back(V.factors[i].degree());
    }
    for (size_t i = 0; i < r; ++i) {
        bool placed = false;
        for (size_t j = 0; j < r && !placed; ++j) {
            if (!used[j] && V.factors[j].degree() == U.factors[i].degree()) {
                used[j] = true;
                out.permutation.push_back(static_cast<int>(j));
                placed = true;
            }
        }
        if (!placed) throw std::invalid_argument("degree multisets differ");
    }
    return out;
}

QuadrantProducts quadrants(const Decomposition& U, const Decomposition& V, int i, int j) {
    int r = static_cast<int>(U.factors.size());
    if (i < 1 || i > r || j < 1 || j > r) throw std::out_of_range("quadrant index");
    SigmaMatch sm = sigma_match(U, V);
    QuadrantProducts q;
    int sj = sm.permutation[static_cast<size_t>(j - 1)];
    for (int k = 1; k <= r; ++k) {
        int sk = sm.permutation[static_cast<size_t>(k - 1)];
        long long dk = U.factors[static_cast<size_t>(k - 1)].degree();
        if (k < i && sk < sj) q.LL *= dk;
        if (k < i && sk > sj) q.LR *= dk;
        if (k > i && sk < sj) q.RL *= dk;
        if (k > i && sk > sj) q.RR *= dk;
    }
    return q;
}

bool coprime_inversion_check(const Decomposition& U, const Decomposition& V) {
    SigmaMatch sm = sigma_match(U, V);
    size_t r = U.factors.size();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j)
            if (sm.permutation[i] > sm.permutation[j] &&
                std::gcd(U.factors[i].degree(), U.factors[j].degree()) != 1)
                return false;
    return true;
}

CrossingWitness crossing_witness(const Decomposition& U, const Decomposition& V, int k) {
    int r = static_cast<int>(U.factors.size());
    if (k < 1 || k > r) throw std::out_of_range("crossing position");
    CrossingWitness w;
    w.q = quadrants(U, V, k, k);
    const Poly& uk = U.factors[static_cast<size_t>(k - 1)];
    int p = uk.degree();
    int LL = static_cast<int>(w.q.LL), LR = static_cast<int>(w.q.LR);
    int RL = static_cast<int>(w.q.RL), RR = static_cast<int>(w.q.RR);
    if (std::gcd(LR, RL) != 1 || std::gcd(LR, p) != 1 || std::gcd(RL, p) != 1)
        throw std::logic_error("crossing products not coprime");

    // (1): split the chains on each side of u_k
    Poly left = lcomp(U.leading, compose_chain(U.factors, 0, static_cast<size_t>(k - 1)));
    Poly right = compose_chain(U.factors, static_cast<size_t>(k), U.factors.size());
    std::tie(w.a, w.b) = peel_right(left, LR, 1);
    if (w.a.degree() != LL) throw std::runtime_error("crossing witness: identity 1 degree");
    std::tie(w.c, w.d) = peel_right(right, RR, 1);
    if (w.c.degree() != RL || w.d.degree() != RR)
        throw std::runtime_error("crossing witness: identity 1 degree");

    // (2)
    std::tie(w.u_hat, w.b_hat) = peel_right(compose(w.b, uk), LR, 2);
    if (!is_indecomposable(w.u_hat)) throw std::runtime_error("crossing witness: identity 2");

    // (3)
    Poly p3 = compose(w.u_hat, w.b_hat, w.c);
    Poly w3;
    std::tie(w3, w.b_tld) = peel_right(p3, LR, 3);
    std::tie(w.c_tld, w.u_tld) = peel_right(w3, p, 3);
    if (!is_indecomposable(w.u_tld)) throw std::runtime_error("crossing witness: identity 3");

    // (4)
    std::tie(w.c_bar, w.u_bar) = peel_right(compose(uk, w.c), p, 4);
    if (!is_indecomposable(w.u_bar)) throw std::runtime_error("crossing witness: identity 4");

    // (5): reuse the middle factor from (3), adjusting by the connecting linears
    Poly p5 = compose(w.b, w.c_bar, w.u_bar);
    Poly b_dot0, w5, c_dot0, u5;
    std::tie(w5, b_dot0) = peel_right(p5, LR, 5);
    std::tie(c_dot0, u5) = peel_right(w5, p, 5);
    if (u5 == w.u_tld) {
        w.c_dot = c_dot0;
        w.b_dot = b_dot0;
    } else {
        auto eq = find_equivalence(u5, w.u_tld);
        if (!eq) throw std::runtime_error("crossing witness: identity 5 construction failed");
        w.c_dot = rcomp(c_dot0, eq->first);
        w.b_dot = lcomp(eq->second, b_dot0);
    }

    // verify everything before returning
    if (compose(w.a, w.b) != left || compose(w.c, w.d) != right)
        throw std::runtime_error("crossing witness: identity 1 failed");
    if (compose(w.b, uk) != compose(w.u_hat, w.b_hat))
        throw std::runtime_error("crossing witness: identity 2 failed");
    if (p3 != compose(w.c_tld, w.u_tld, w.b_tld))
        throw std::runtime_error("crossing witness: identity 3 failed");
    if (compose(uk, w.c) != compose(w.c_bar, w.u_bar))
        throw std::runtime_error("crossing witness: identity 4 failed");
    if (p5 != compose(w.c_dot, w.u_tld, w.b_dot))
        throw std::runtime_error("crossing witness: identity 5 failed");
    return w;
}

Poly BlockForm::recompose() const {
    Poly acc = Poly::X();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) acc = compose(it->first, acc);
    return lcomp(leading, acc);
}

namespace {

BlockTag classify_block(const Poly& p) {
    if (detect_cyclic(p).tag == FormTag::Cyclic) return BlockTag::CyclicBlock;
    if (p.degree() >= 3 && detect_dihedral(p).tag == FormTag::Dihedral)
        return BlockTag::DihedralBlock;
    return BlockTag::Indecomposable;
}

}  // namespace

BlockForm block_form(const Poly& f) {
    Decomposition dec = complete_decomposition(f);
    BlockForm out;
    out.leading = dec.leading;
    for (const Poly& u : dec.factors) out.blocks.emplace_back(u, classify_block(u));
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i + 1 < out.blocks.size(); ++i) {
            Poly comp = compose(out.blocks[i].first, out.blocks[i + 1].first);
            BlockTag tag = classify_block(comp);
            if (tag == BlockTag::Indecomposable) continue;
            out.blocks[i] = {comp, tag};
            out.blocks.erase(out.blocks.begin() + static_cast<long>(i) + 1);
            merged = true;
            break;
        }
    }
    return out;
}

InversionBoundReport inversion_bound_check(const Decomposition& U, const Decomposition& V,
                                           int k) {
    int r = static_cast<int>(U.factors.size());
    if (k < 1 || k > r) throw std::out_of_range("position");
    const Poly& uk = U.factors[static_cast<size_t>(k - 1)];
    if (detect_cyclic(uk).tag == FormTag::Cyclic)
        throw std::invalid_argument("cyclic factor excluded");
    if (uk.degree() >= 3 && detect_dihedral(uk).tag == FormTag::Dihedral)
        throw std::invalid_argument("dihedral factor excluded");
    InversionBoundReport rep;
    QuadrantProducts q = quadrants(U, V, k, k);
    rep.n = q.LR;
    rep.m = q.RL;
    rep.p = uk.degree();
    rep.ok = rep.m * rep.n < rep.p;
    if (rep.m > 1) {
        try {
            CrossingWitness w = crossing_witness(U, V, k);
            Ritt2Classification cls = classify_ritt(uk, w.c, w.c_bar, w.u_bar);
            if (cls.kind == RittKind::ExponentialType && cls.witness_supported)
                rep.twist_exponent = cls.s;
        } catch (const std::exception&) {
            // bound still reported; the shape witness is optional
        }
    }
    return rep;
}

ChebMoveReport cheb_move_check(const Decomposition& U, const Decomposition& V, int k, int i) {
    int r = static_cast<int>(U.factors.size());
    if (k < 1 || k > r || i < 1 || i > r) throw std::out_of_range("position");
    const Poly& uk = U.factors[static_cast<size_t>(k - 1)];
    if (uk.degree() < 3 || detect_dihedral(uk).tag != FormTag::Dihedral)
        throw std::invalid_argument("factor at k is not dihedral");
    ChebMoveReport rep;
    if (i == k) return rep;
    Poly span;
    if (i > k) {
        rep.crossing = quadrants(U, V, i - 1, k).RL;
        span = compose_chain(U.factors, static_cast<size_t>(k - 1), static_cast<size_t>(i));
    } else {
        rep.crossing = quadrants(U, V, i + 1, k).LR;
        span = compose_chain(U.factors, static_cast<size_t>(i - 1), static_cast<size_t>(k));
    }
    rep.applicable = rep.crossing > 2;
    if (rep.applicable) rep.holds = detect_dihedral(span).tag == FormTag::Dihedral;
    return rep;
}

BarrierReport cyclic_chain_barrier_check(const Decomposition& U) {
    size_t r = U.factors.size();
    std::vector<FormReport> wit;
    for (const Poly& u : U.factors) {
        FormReport rep = detect_cyclic(u);
        if (rep.tag != FormTag::Cyclic) throw std::invalid_argument("factor not cyclic");
        wit.push_back(rep);
    }
    BarrierReport out;
    for (size_t k = 0; k + 1 < r; ++k) {
        // ramification point of u_k vs branch point (critical value) of u_{k+1}
        if (wit[k].cyclic->beta != wit[k + 1].cyclic->v)
            out.barriers.push_back(static_cast<int>(k) + 1);
    }
    std::vector<Decomposition> classes = all_classes(U.recompose());
    out.class_count = classes.size();
    for (const Decomposition& V : classes) {
        SigmaMatch sm = sigma_match(U, V);
        for (int k : out.barriers)
            for (size_t j = 0; j < r; ++j)
                if ((sm.permutation[j] < k) != (static_cast<int>(j) < static_cast<size_t>(k)))
                    out.ok = false;
    }
    return out;
}

}  // namespace polydec
