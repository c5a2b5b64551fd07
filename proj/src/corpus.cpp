#include "polydec/corpus.hpp"

#include <random>

#include "polydec/decompose.hpp"

namespace polydec {

std::vector<CorpusItem> corpus(std::uint32_t seed, int count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(2, 4), deg(2, 5), co(-3, 3);
    std::vector<CorpusItem> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        CorpusItem item;
        int r = len(rng);
        for (int i = 0; i < r; ++i) {
            for (;;) {
                int d = deg(rng);
                std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
                for (auto& x : c) x = co(rng);
                while (c.back() == 0) c.back() = co(rng);
                Poly u{std::vector<Rational>(c)};
                if (is_indecomposable(u)) {
                    item.factors.push_back(std::move(u));
                    break;
                }
            }
        }
        item.f = compose(item.factors);
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace polydec
