#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "polydec/chebyshev.hpp"
#include "polydec/forms.hpp"
#include "polydec/msystems.hpp"
#include "polydec/poly_algebra.hpp"
#include "polydec/ritt.hpp"

using namespace polydec;

static MultisetSystem sys23() {
    MultisetSystem s;
    s.m = 2;
    s.n = 3;
    s.pairs = {{{2, 1}, {2}}, {{2, 1}, {1, 1}}};
    return s;
}

TEST_CASE("hypothesis checks") {
    CHECK(check_hypotheses(sys23()));

    MultisetSystem bad = sys23();
    bad.pairs[0].first = {1, 1};  // sum 2 != 3
    CHECK(!check_hypotheses(bad));

    MultisetSystem short23;
    short23.m = 2;
    short23.n = 3;
    short23.pairs = {{{3}, {1, 1}}};
    CHECK(!check_hypotheses(short23));  // gcd ledger comes out at 4, not 2

    MultisetSystem flat = sys23();
    flat.pairs[1] = {{1, 1, 1}, {1, 1}};
    CHECK_THROWS_AS(check_hypotheses(flat), std::invalid_argument);

    MultisetSystem noncop = sys23();
    noncop.m = 3;
    CHECK_THROWS_AS(check_hypotheses(noncop), std::invalid_argument);
}

TEST_CASE("conclusion tags") {
    Conclusion c = classify_conclusion(sys23());
    CHECK(c.tag == ConclusionTag::C2);
    REQUIRE(c.witness_index);
    CHECK(*c.witness_index == 0);

    // mirror image: swap the roles of the two sides
    MultisetSystem mir;
    mir.m = 3;
    mir.n = 2;
    mir.pairs = {{{2}, {2, 1}}, {{1, 1}, {2, 1}}};
    Conclusion cm = classify_conclusion(mir);
    CHECK(cm.tag == ConclusionTag::C1);

    // two branch points, everything at most double
    MultisetSystem dih;
    dih.m = 5;
    dih.n = 3;
    dih.pairs = {{{2, 1}, {2, 2, 1}}, {{2, 1}, {2, 2, 1}}};
    REQUIRE(check_hypotheses(dih));
    CHECK(classify_conclusion(dih).tag == ConclusionTag::C3);

    CHECK_THROWS_AS(classify_conclusion(MultisetSystem{2, 3, {{{3}, {1, 1}}}}),
                    std::invalid_argument);
}

TEST_CASE("riemann-hurwitz ledger") {
    CHECK(rh_identity_check(sys23()));
    for (auto [m, n] : {std::pair{2, 3}, {3, 4}, {2, 5}, {4, 5}, {5, 6}, {6, 7}})
        for (const auto& s : enumerate_systems(m, n, 3)) CHECK(rh_identity_check(s));
}

// direct product-space enumeration with no pruning
static std::vector<MultisetSystem> slow_enumerate(int m, int n, int k_max) {
    std::vector<std::vector<int>> pa, pb;
    auto parts = [](int total) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left, int mx) -> void {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (int p = std::min(left, mx); p >= 1; --p) {
                cur.push_back(p);
                self(self, left - p, p);
                cur.pop_back();
            }
        };
        rec(rec, total, total);
        return out;
    };
    pa = parts(n);
    pb = parts(m);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> cand;
    for (const auto& A : pa)
        for (const auto& B : pb)
            if (A[0] > 1 || B[0] > 1) cand.emplace_back(A, B);
    std::vector<MultisetSystem> out;
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (!pick.empty()) {
            MultisetSystem s;
            s.m = m;
            s.n = n;
            for (size_t i : pick) s.pairs.push_back(cand[i]);
            if (check_hypotheses(s)) out.push_back(s);
        }
        if (static_cast<int>(pick.size()) == k_max) return;
        for (size_t i = from; i < cand.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

static std::set<std::vector<std::pair<std::vector<int>, std::vector<int>>>> key_set(
    const std::vector<MultisetSystem>& v) {
    std::set<std::vector<std::pair<std::vector<int>, std::vector<int>>>> out;
    for (const auto& s : v) {
        auto p = s.pairs;
        std::sort(p.begin(), p.end());
        out.insert(p);
    }
    return out;
}

TEST_CASE("enumeration against the unpruned search") {
    for (auto [m, n] : {std::pair{2, 3}, {3, 4}}) {
        auto fast = enumerate_systems(m, n, 2);
        auto slow = slow_enumerate(m, n, 2);
        CHECK(fast.size() == slow.size());
        CHECK(key_set(fast) == key_set(slow));
        CHECK(!fast.empty());
    }

    bool has23 = false;
    auto p23 = sys23().pairs;
    std::sort(p23.begin(), p23.end());
    for (const auto& s : enumerate_systems(2, 3, 2)) {
        auto p = s.pairs;
        std::sort(p.begin(), p.end());
        if (p == p23) has23 = true;
    }
    CHECK(has23);

    for (const auto& s : enumerate_systems(2, 3, 1))
        CHECK(classify_conclusion(s).tag != ConclusionTag::Violation);

    CHECK_THROWS_AS(enumerate_systems(2, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_systems(3, 8, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_systems(2, 3, 5), std::invalid_argument);
}

TEST_CASE("no violations at desk scale") {
    size_t total = 0;
    for (int m = 2; m <= 7; ++m) {
        for (int n = m + 1; n <= 7; ++n) {
            if (std::gcd(m, n) != 1) continue;
            for (const auto& s : enumerate_systems(m, n, 3)) {
                ++total;
                CHECK(classify_conclusion(s).tag != ConclusionTag::Violation);
            }
        }
    }
    CHECK(total > 50);
}

// ramification multisets read off an actual coprime relation a∘b = c∘d
static MultisetSystem extract_system(const Poly& a, const Poly& b, const Poly& c,
                                     const Poly& d) {
    REQUIRE(compose(a, b) == compose(c, d));
    MultisetSystem s;
    s.n = a.degree();
    s.m = c.degree();
    RamProfile prof = ram_profile(compose(a, b));
    REQUIRE(static_cast<int>(prof.rational_branch_data.size()) == prof.branch_count);
    auto pattern = [](const Poly& p) {
        std::vector<int> out;
        for (const auto& [base, mult] : squarefree_decomposition(p).factors)
            out.insert(out.end(), static_cast<size_t>(base.degree()), mult);
        std::sort(out.rbegin(), out.rend());
        return out;
    };
    for (const auto& [point, fpattern] : prof.rational_branch_data)
        s.pairs.emplace_back(pattern(a - Poly(point)), pattern(c - Poly(point)));
    return s;
}

TEST_CASE("geometric extraction") {
    Poly X = Poly::X();

    // Chebyshev commutation: only double points, two branch points
    MultisetSystem cheb = extract_system(chebyshev(3), chebyshev(5), chebyshev(5), chebyshev(3));
    REQUIRE(check_hypotheses(cheb));
    CHECK(classify_conclusion(cheb).tag == ConclusionTag::C3);
    CHECK(classify_ritt(chebyshev(3), chebyshev(5), chebyshev(5), chebyshev(3)).kind ==
          RittKind::ChebyshevType);

    // exponential exchange: one fully ramified point on the degree-n side
    Poly b = X * (X * X + Poly(Rational(1)));
    Poly cc = X * (X + Poly(Rational(1))).pow(2);
    MultisetSystem ex = extract_system(X * X, b, cc, X * X);
    REQUIRE(check_hypotheses(ex));
    CHECK(classify_conclusion(ex).tag == ConclusionTag::C1);
    CHECK(classify_ritt(X * X, b, cc, X * X).kind == RittKind::ExponentialType);

    // swapped orientation lands on the mirror conclusion
    MultisetSystem ex2 = extract_system(cc, X * X, X * X, b);
    REQUIRE(check_hypotheses(ex2));
    CHECK(classify_conclusion(ex2).tag == ConclusionTag::C2);
}
