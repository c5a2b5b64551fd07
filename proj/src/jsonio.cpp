#include "polydec/jsonio.hpp"

namespace polydec {

Json json_rational(const Rational& x) {
    return Json::array({x.get_num().get_str(), x.get_den().get_str()});
}

Json json_poly(const Poly& f) {
    Json coeffs = Json::array();
    for (const Rational& c : f.coeffs()) coeffs.push_back(json_rational(c));
    return Json{{"coeffs", std::move(coeffs)}};
}

Json json_linear(const Linear& l) {
    return Json{{"scale", json_rational(l.scale)}, {"shift", json_rational(l.shift)}};
}

Json json_decomposition(const Decomposition& d) {
    Json factors = Json::array();
    for (const Poly& f : d.factors) factors.push_back(json_poly(f));
    return Json{{"leading", json_linear(d.leading)}, {"factors", std::move(factors)}};
}

Json json_form_report(const FormReport& r) {
    switch (r.tag) {
        case FormTag::None:
            return Json{{"kind", "none"}};
        case FormTag::Cyclic:
            return Json{{"kind", "cyclic"},
                        {"n", r.n},
                        {"witness",
                         {{"beta", json_rational(r.cyclic->beta)},
                          {"c", json_rational(r.cyclic->c)},
                          {"v", json_rational(r.cyclic->v)}}}};
        case FormTag::Dihedral:
            return Json{{"kind", "dihedral"},
                        {"n", r.n},
                        {"witness",
                         {{"beta", json_rational(r.dihedral->beta)},
                          {"alpha_sq", json_rational(r.dihedral->alpha_sq)},
                          {"scale", json_rational(r.dihedral->scale)},
                          {"shift", json_rational(r.dihedral->shift)}}}};
        case FormTag::TwistInner:
            return Json{{"kind", "twist_inner"},
                        {"n", r.n},
                        {"s", r.s},
                        {"witness",
                         {{"l1", json_linear(r.twist_inner->l1)},
                          {"l2", json_linear(r.twist_inner->l2)},
                          {"h", json_poly(r.twist_inner->h)}}}};
        case FormTag::TwistOuter:
            return Json{{"kind", "twist_outer"},
                        {"n", r.n},
                        {"s", r.s},
                        {"witness",
                         {{"c0", json_rational(r.twist_outer->c0)},
                          {"beta", json_rational(r.twist_outer->beta)},
                          {"scale", json_rational(r.twist_outer->scale)},
                          {"H", json_poly(r.twist_outer->H)}}}};
    }
    return Json{{"kind", "none"}};
}

Json json_ritt2(const Ritt2Classification& c) {
    const char* kind = "trivial_linear";
    if (c.kind == RittKind::ChebyshevType) kind = "chebyshev";
    if (c.kind == RittKind::ExponentialType) kind = "exponential";
    Json j{{"kind", kind},
           {"swapped", c.swapped},
           {"witness_supported", c.witness_supported},
           {"n", c.n},
           {"m", c.m},
           {"s", c.s}};
    if (c.link) j["link"] = json_linear(*c.link);
    if (c.kind != RittKind::TrivialLinear) {
        j["h"] = json_poly(c.h);
        j["g_left"] = json_poly(c.g_left);
        j["h_right"] = json_poly(c.h_right);
        if (c.witness_supported) {
            j["a_hat"] = json_poly(c.a_hat);
            j["b_hat"] = json_poly(c.b_hat);
            j["c_hat"] = json_poly(c.c_hat);
            j["d_hat"] = json_poly(c.d_hat);
            Json lin = Json::array();
            for (const Linear& l : c.linears) lin.push_back(json_linear(l));
            j["linears"] = std::move(lin);
            j["eps_b"] = c.eps_b;
            j["eps_d"] = c.eps_d;
        }
    }
    return j;
}

Json json_iterate_chain(const IterateChainReport& r) {
    return Json{{"kind", "iterate_chain"},
                {"e", r.e},
                {"k_max", r.k_max},
                {"splits_checked", r.splits_checked},
                {"clause1_quadrant_reading", r.clause1_quadrant_reading},
                {"ok", r.ok},
                {"violations", r.violations}};
}

Json json_iterate_bound(const IterateBoundReport& r) {
    return Json{{"kind", "iterate_bound"},
                {"n", r.n},
                {"e", r.e},
                {"max_k", r.max_k},
                {"split_count", r.split_count},
                {"extremal_e", r.extremal_e},
                {"ok", r.ok}};
}

Json json_system(const MultisetSystem& s) {
    Json pairs = Json::array();
    for (const auto& [A, B] : s.pairs) pairs.push_back(Json::array({A, B}));
    return Json{{"m", s.m}, {"n", s.n}, {"pairs", std::move(pairs)}};
}

Json json_conclusion(const Conclusion& c) {
    const char* tag = "violation";
    switch (c.tag) {
        case ConclusionTag::C1: tag = "C1"; break;
        case ConclusionTag::C2: tag = "C2"; break;
        case ConclusionTag::C3: tag = "C3"; break;
        case ConclusionTag::Violation: break;
    }
    Json j{{"kind", "conclusion"}, {"tag", tag}};
    if (c.witness_index) j["witness_index"] = *c.witness_index;
    return j;
}

Json json_error(const std::string& message) {
    return Json{{"kind", "error"}, {"message", message}};
}

}  // namespace polydec
