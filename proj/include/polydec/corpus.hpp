#pragma once

#include <cstdint>
#include <vector>

#include "polydec/poly.hpp"

namespace polydec {

// Reproducible random composites for property suites: chains of 2-4
// indecomposables with factor degrees in {2..5} and coefficients in [-3,3].
struct CorpusItem {
    std::vector<Poly> factors;
    Poly f;
};

std::vector<CorpusItem> corpus(std::uint32_t seed = 2024, int count = 200);

}  // namespace polydec
