#pragma once

#include <json.hpp>

#include "polydec/decompose.hpp"
#include "polydec/forms.hpp"
#include "polydec/iterates.hpp"
#include "polydec/msystems.hpp"
#include "polydec/ritt.hpp"

namespace polydec {

using Json = nlohmann::ordered_json;  // stable field order

// Rationals as ["num", "den"] decimal strings; polynomials as
// {"coeffs": [...]} low to high. Reports carry a "kind" discriminator.
Json json_rational(const Rational& x);
Json json_poly(const Poly& f);
Json json_linear(const Linear& l);
Json json_decomposition(const Decomposition& d);
Json json_form_report(const FormReport& r);
Json json_ritt2(const Ritt2Classification& c);
Json json_iterate_chain(const IterateChainReport& r);
Json json_iterate_bound(const IterateBoundReport& r);
Json json_system(const MultisetSystem& s);
Json json_conclusion(const Conclusion& c);

Json json_error(const std::string& message);

}  // namespace polydec
