#include "polydec/msystems.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polydec {

namespace {

void require_structure(const MultisetSystem& sys) {
    if (sys.m < 2 || sys.n < 2 || std::gcd(sys.m, sys.n) != 1)
        throw std::invalid_argument("m and n must be coprime and > 1");
    if (sys.pairs.empty()) throw std::invalid_argument("need at least one pair");
    for (const auto& [A, B] : sys.pairs) {
        if (A.empty() || B.empty()) throw std::invalid_argument("empty multiset");
        bool big = false;
        for (int a : A) {
            if (a < 1) throw std::invalid_argument("nonpositive multiset entry");
            big = big || a > 1;
        }
        for (int b : B) {
            if (b < 1) throw std::invalid_argument("nonpositive multiset entry");
            big = big || b > 1;
        }
        if (!big) throw std::invalid_argument("pair with every entry equal to 1");
    }
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int excess(const std::vector<int>& A, const std::vector<int>& B) {
    // sum of alpha - gcd(alpha, beta) over the pair
    int t = 0;
    for (int a : A)
        for (int b : B) t += a - std::gcd(a, b);
    return t;
}

}  // namespace

bool check_hypotheses(const MultisetSystem& sys) {
    require_structure(sys);
    int h2a = 0, h2b = 0, h3a = 0, h3b = 0;
    for (const auto& [A, B] : sys.pairs) {
        if (sum(A) != sys.n || sum(B) != sys.m) return false;
        h2a += sys.n - static_cast<int>(A.size());
        h2b += excess(A, B);
        h3a += sys.m - static_cast<int>(B.size());
        h3b += excess(B, A);
    }
    return h2a == sys.n - 1 && h2b == sys.n - 1 && h3a == sys.m - 1 && h3b == sys.m - 1;
}

Conclusion classify_conclusion(const MultisetSystem& sys) {
    if (!check_hypotheses(sys)) throw std::invalid_argument("hypotheses do not hold");
    for (size_t i = 0; i < sys.pairs.size(); ++i) {
        const auto& [A, B] = sys.pairs[i];
        if (A.size() == 1 && A[0] == sys.n) {
            int coprime = 0;
            bool rest_divisible = true;
            for (int b : B) {
                if (std::gcd(b, sys.n) == 1)
                    ++coprime;
                else if (b % sys.n != 0)
                    rest_divisible = false;
            }
            if (coprime == 1 && rest_divisible)
                return {ConclusionTag::C1, static_cast<int>(i)};
        }
    }
    for (size_t i = 0; i < sys.pairs.size(); ++i) {
        const auto& [A, B] = sys.pairs[i];
        if (B.size() == 1 && B[0] == sys.m) {
            int coprime = 0;
            bool rest_divisible = true;
            for (int a : A) {
                if (std::gcd(a, sys.m) == 1)
                    ++coprime;
                else if (a % sys.m != 0)
                    rest_divisible = false;
            }
            if (coprime == 1 && rest_divisible)
                return {ConclusionTag::C2, static_cast<int>(i)};
        }
    }
    if (sys.pairs.size() == 2) {
        int top = 0;
        for (const auto& [A, B] : sys.pairs) {
            for (int a : A) top = std::max(top, a);
            for (int b : B) top = std::max(top, b);
        }
        if (top == 2) return {ConclusionTag::C3, std::nullopt};
    }
    return {ConclusionTag::Violation, std::nullopt};
}

bool rh_identity_check(const MultisetSystem& sys) {
    if (!check_hypotheses(sys)) throw std::invalid_argument("hypotheses do not hold");
    long long total = 0;
    for (const auto& [A, B] : sys.pairs) {
        long long g = 0;
        for (int a : A)
            for (int b : B) g += std::gcd(a, b);
        total += static_cast<long long>(sys.m) * sys.n - g;
    }
    return total == static_cast<long long>(sys.m) * sys.n - 1;
}

namespace {

// partitions of n as sorted (descending) multisets
std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

struct PairData {
    std::vector<int> A, B;
    int w_na = 0, w_ea = 0, w_nb = 0, w_eb = 0;  // the four ledger weights
};

}  // namespace

std::vector<MultisetSystem> enumerate_systems(int m, int n, int k_max, int size_bound) {
    if (m < 2 || n < 2 || std::gcd(m, n) != 1)
        throw std::invalid_argument("m and n must be coprime and > 1");
    if (m > size_bound || n > size_bound) throw std::invalid_argument("degree bound exceeded");
    if (k_max < 1 || k_max > 4) throw std::invalid_argument("k_max must be in 1..4");

    std::vector<PairData> cand;
    for (const auto& A : partitions(n)) {
        for (const auto& B : partitions(m)) {
            if (A[0] == 1 && B[0] == 1) continue;  // no ramification at all
            PairData p;
            p.A = A;
            p.B = B;
            p.w_na = n - static_cast<int>(A.size());
            p.w_ea = excess(A, B);
            p.w_nb = m - static_cast<int>(B.size());
            p.w_eb = excess(B, A);
            cand.push_back(std::move(p));
        }
    }

    std::vector<MultisetSystem> out;
    std::vector<size_t> picked;
    auto rec = [&](auto&& self, size_t from, int na, int ea, int nb, int eb) -> void {
        if (na == n - 1 && ea == n - 1 && nb == m - 1 && eb == m - 1 && !picked.empty()) {
            MultisetSystem sys;
            sys.m = m;
            sys.n = n;
            for (size_t idx : picked) sys.pairs.emplace_back(cand[idx].A, cand[idx].B);
            out.push_back(std::move(sys));
        }
        if (static_cast<int>(picked.size()) == k_max) return;
        for (size_t idx = from; idx < cand.size(); ++idx) {
            const PairData& p = cand[idx];
            if (na + p.w_na > n - 1 || ea + p.w_ea > n - 1 || nb + p.w_nb > m - 1 ||
                eb + p.w_eb > m - 1)
                continue;
            picked.push_back(idx);
            self(self, idx, na + p.w_na, ea + p.w_ea, nb + p.w_nb, eb + p.w_eb);
            picked.pop_back();
        }
    };
    rec(rec, 0, 0, 0, 0, 0);
    return out;
}

}  // namespace polydec
