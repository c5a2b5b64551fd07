#include "polydec/parse.hpp"

#include <cctype>

#include "polydec/chebyshev.hpp"

namespace polydec {

namespace {

constexpr long kMaxExponent = 4096;
constexpr long kMaxChebIndex = 4096;

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(pos_, "unexpected trailing input");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool at_composition() {
        // 'o' requires whitespace on both sides
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != 'o') return false;
        if (pos_ == 0 || !std::isspace(static_cast<unsigned char>(s_[pos_ - 1]))) return false;
        return pos_ + 1 < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_ + 1]));
    }

    long read_uint(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > kMaxExponent) throw ParseError(start, std::string(what) + " too large");
            ++pos_;
        }
        if (pos_ == start) throw ParseError(pos_, std::string("expected ") + what);
        return v;
    }

    Rational read_rational() {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits.push_back(s_[pos_++]);
        if (digits.empty()) throw ParseError(start, "expected a number");
        Integer num(digits);
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::string den;
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                den.push_back(s_[pos_++]);
            if (den.empty()) throw ParseError(dstart, "expected a denominator");
            Integer d(den);
            if (d == 0) throw ParseError(dstart, "zero denominator");
            return make_rational(num, d);
        }
        return Rational(num);
    }

    Poly expr() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (s_[pos_] == '-') sign = -1;
            ++pos_;
        }
        Poly acc = term() * Rational(sign);
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            Poly t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
    }

    Poly term() {
        Poly acc = comp();
        while (peek() == '*') {
            ++pos_;
            acc = acc * comp();
        }
        return acc;
    }

    Poly comp() {  // right-associative
        Poly lhs = power();
        if (!at_composition()) return lhs;
        ++pos_;
        return compose(lhs, comp());
    }

    Poly power() {
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            long e = read_uint("exponent");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'X') {
            ++pos_;
            return Poly::X();
        }
        if (c == 'T') {
            ++pos_;
            if (peek() != '(') throw ParseError(pos_, "expected '(' after T");
            ++pos_;
            long n = read_uint("Chebyshev index");
            if (n > kMaxChebIndex) throw ParseError(pos_, "Chebyshev index too large");
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return chebyshev(static_cast<int>(n));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(read_rational());
        throw ParseError(pos_, "expected an atom");
    }
};

}  // namespace

Poly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace polydec
