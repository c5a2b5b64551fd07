#include "polydec/laurent.hpp"

namespace polydec {

LaurentPoly laurent_substitute(const Poly& f, const LaurentPoly& arg) {
    LaurentPoly acc;
    for (int e = f.degree(); e >= 0; --e) {
        acc = acc * arg;
        acc += LaurentPoly(f.coeff(e));
    }
    return acc;
}

}  // namespace polydec
