#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "polydec/chebyshev.hpp"
#include "polydec/decompose.hpp"
#include "polydec/enumerate.hpp"
#include "polydec/forms.hpp"
#include "polydec/iterates.hpp"
#include "polydec/jsonio.hpp"
#include "polydec/msystems.hpp"
#include "polydec/parse.hpp"
#include "polydec/ritt.hpp"

using namespace polydec;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_decomposition(const Decomposition& d) {
    std::cout << "leading: " << d.leading.to_poly().str() << "\n";
    for (size_t i = 0; i < d.factors.size(); ++i)
        std::cout << "factor " << i + 1 << ": " << d.factors[i].str() << "\n";
}

FormReport recognize(const Poly& f) {
    FormReport r = detect_cyclic(f);
    if (r.tag != FormTag::None) return r;
    if (f.degree() >= 3) {
        r = detect_dihedral(f);
        if (r.tag != FormTag::None) return r;
    }
    return detect_twist_inner(f);
}

const char* form_name(FormTag t) {
    switch (t) {
        case FormTag::Cyclic: return "cyclic";
        case FormTag::Dihedral: return "dihedral";
        case FormTag::TwistInner: return "twist_inner";
        case FormTag::TwistOuter: return "twist_outer";
        case FormTag::None: break;
    }
    return "none";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact functional decomposition of rational polynomials"};
    app.require_subcommand(1);

    bool json = false;
    unsigned seed = 2024;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--seed", seed, "seed for randomized corpus commands");

    std::string e1, e2, e3, e4;
    int arg_n = 0, arg_e = 1, arg_cap = 4096, arg_m = 0, arg_kmax = 0;

    auto* c_eval = app.add_subcommand("eval", "parse and print a polynomial expression");
    c_eval->add_option("expr", e1)->required();

    auto* c_dec = app.add_subcommand("decompose", "complete decomposition");
    c_dec->add_option("expr", e1)->required();

    auto* c_classes = app.add_subcommand("classes", "all equivalence classes of decompositions");
    c_classes->add_option("expr", e1)->required();

    auto* c_rec = app.add_subcommand("recognize", "cyclic/dihedral/twist form detection");
    c_rec->add_option("expr", e1)->required();

    auto* c_ritt2 = app.add_subcommand("ritt2", "classify a two-sided relation a∘b = c∘d");
    c_ritt2->add_option("a", e1)->required();
    c_ritt2->add_option("b", e2)->required();
    c_ritt2->add_option("c", e3)->required();
    c_ritt2->add_option("d", e4)->required();

    auto* c_nb = app.add_subcommand("neighbors", "swapped-degree companions of a pair");
    c_nb->add_option("u", e1)->required();
    c_nb->add_option("v", e2)->required();

    auto* c_it = app.add_subcommand("iterate-check", "structure checks on splits of iterates");
    c_it->add_option("expr", e1)->required();
    c_it->add_option("--e", arg_e, "iterate exponent")->required();
    c_it->add_option("--cap", arg_cap, "coefficient count cap");

    auto* c_cheb = app.add_subcommand("cheb", "Chebyshev polynomial coefficients");
    c_cheb->add_option("n", arg_n)->required()->check(CLI::NonNegativeNumber);

    auto* c_lem = app.add_subcommand("lemma-a", "enumerate and classify multiset systems");
    c_lem->add_option("m", arg_m)->required();
    c_lem->add_option("n", arg_n)->required();
    c_lem->add_option("kmax", arg_kmax)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_eval) {
            Poly f = parse_poly(e1);
            if (json) emit(json_poly(f));
            else std::cout << f.str() << "\n";
        } else if (*c_dec) {
            Decomposition d = complete_decomposition(parse_poly(e1));
            if (json) emit(json_decomposition(d));
            else print_decomposition(d);
        } else if (*c_classes) {
            std::vector<Decomposition> cl = all_classes(parse_poly(e1));
            if (json) {
                Json arr = Json::array();
                for (const auto& d : cl) arr.push_back(json_decomposition(d));
                emit(arr);
            } else {
                std::cout << cl.size() << " classes\n";
                for (size_t i = 0; i < cl.size(); ++i) {
                    std::cout << "class " << i + 1 << ":\n";
                    print_decomposition(cl[i]);
                }
            }
        } else if (*c_rec) {
            FormReport r = recognize(parse_poly(e1));
            if (json) emit(json_form_report(r));
            else std::cout << form_name(r.tag) << "\n";
        } else if (*c_ritt2) {
            Ritt2Classification c =
                classify_ritt(parse_poly(e1), parse_poly(e2), parse_poly(e3), parse_poly(e4));
            if (json) {
                emit(json_ritt2(c));
            } else {
                const char* k = c.kind == RittKind::TrivialLinear ? "trivial_linear"
                                : c.kind == RittKind::ChebyshevType ? "chebyshev"
                                                                    : "exponential";
                std::cout << k << "\n";
            }
        } else if (*c_nb) {
            auto nb = ritt_neighbors_of_pair(parse_poly(e1), parse_poly(e2));
            if (json) {
                Json arr = Json::array();
                for (const auto& [a, b] : nb)
                    arr.push_back(Json{{"outer", json_poly(a)}, {"inner", json_poly(b)}});
                emit(arr);
            } else {
                for (const auto& [a, b] : nb)
                    std::cout << a.str() << "  o  " << b.str() << "\n";
                if (nb.empty()) std::cout << "no neighbors\n";
            }
        } else if (*c_it) {
            Poly f = parse_poly(e1);
            IterateChainReport chain = iterate_chain_check(f, arg_e, arg_cap);
            Json j{{"chain", json_iterate_chain(chain)}};
            std::optional<IterateBoundReport> bound;
            if (!is_conjugate_power(f) && !is_conjugate_chebyshev(f)) {
                bound = iterates_bound_check(f, arg_e, arg_cap);
                j["bound"] = json_iterate_bound(*bound);
            }
            if (json) {
                emit(j);
            } else {
                std::cout << "chain check: " << (chain.ok ? "ok" : "violated")
                          << " (k_max " << chain.k_max << ", " << chain.splits_checked
                          << " splits)\n";
                for (const auto& v : chain.violations) std::cout << "  " << v << "\n";
                if (bound)
                    std::cout << "bound check: " << (bound->ok ? "ok" : "violated")
                              << " (max_k " << bound->max_k << ")\n";
            }
        } else if (*c_cheb) {
            Poly t = chebyshev(arg_n);
            if (json) {
                emit(json_poly(t));
            } else {
                for (int e = 0; e <= t.degree(); ++e)
                    std::cout << t.coeff(e).get_str() << (e == t.degree() ? "\n" : " ");
            }
        } else if (*c_lem) {
            auto systems = enumerate_systems(arg_m, arg_n, arg_kmax);
            Json arr = Json::array();
            for (const auto& s : systems) {
                Conclusion c = classify_conclusion(s);
                if (json) {
                    arr.push_back(Json{{"system", json_system(s)},
                                       {"conclusion", json_conclusion(c)},
                                       {"rh_identity", rh_identity_check(s)}});
                } else {
                    std::cout << json_conclusion(c)["tag"].get<std::string>() << "  "
                              << json_system(s).dump() << "\n";
                }
            }
            if (json) emit(arr);
        }
    } catch (const std::exception& e) {
        if (json) emit(json_error(e.what()));
        else std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
