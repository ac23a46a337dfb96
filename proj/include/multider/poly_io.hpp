#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "multider/poly.hpp"

namespace multider {

// Text format: terms joined by +/-, each term like `3/2*x1^2*x2^-1`.
// Cyclotomic scalars are bracketed polynomials in z, e.g. `[1 - z^2]*x1`.

namespace detail {

inline bool scalar_has_sign(const Rational& c, Rational& mag) {
    if (c.sign() < 0) { mag = -c; return true; }
    mag = c;
    return false;
}

inline bool scalar_has_sign(const Cyclotomic& c, Cyclotomic& mag) {
    // Sign of the first nonzero residue coefficient, so conjugate forms like
    // x1 - [z]*x2 print with a minus rather than a bracketed negative.
    for (const Rational& a : c.coeffs()) {
        if (a.is_zero()) continue;
        if (a.sign() < 0) { mag = -c; return true; }
        break;
    }
    mag = c;
    return false;
}

} // namespace detail

template <class K>
std::string to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    const Vars& vars = p.vars();
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : p.terms()) {
        K mag(0);
        bool negative = detail::scalar_has_sign(coeff, mag);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::string monostr;
        for (int v = 0; v < vars.count(); ++v) {
            long e = mono::exponent(key, v);
            if (e == 0) continue;
            if (!monostr.empty()) monostr += '*';
            monostr += vars.name(v);
            if (e != 1) monostr += '^' + std::to_string(e);
        }
        if (monostr.empty()) {
            os << mag.to_string();
        } else if (mag.is_one()) {
            os << monostr;
        } else {
            os << mag.to_string() << '*' << monostr;
        }
    }
    return os.str();
}

namespace detail {

struct Lexer {
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char next() {
        char c = peek();
        if (pos < s.size()) ++pos;
        return c;
    }
    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            size_t save = pos;
            ++pos;
            size_t digits = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == digits) pos = save; // not a fraction after all
        }
        if (pos == start) throw ParseError("expected number at position " + std::to_string(pos) +
                                           " in '" + s + "'");
        return s.substr(start, pos - start);
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
        if (pos == start) throw ParseError("expected name at position " + std::to_string(pos) +
                                           " in '" + s + "'");
        return s.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        bool neg = eat('-');
        std::string num = number();
        if (num.find('/') != std::string::npos) throw ParseError("expected integer, got " + num);
        long v = std::stol(num);
        return neg ? -v : v;
    }
};

// Bracket body: rational polynomial in z, ascending or any order, e.g. `1 - z^2`.
inline std::vector<Rational> parse_zpoly(Lexer& lx) {
    std::vector<Rational> coeffs;
    auto put = [&](long e, const Rational& c) {
        if (e < 0) throw ParseError("negative power of z in cyclotomic scalar");
        if (static_cast<long>(coeffs.size()) <= e) coeffs.resize(e + 1, Rational(0));
        coeffs[e] += c;
    };
    bool first = true;
    while (true) {
        char c = lx.peek();
        if (c == ']' || c == '\0') break;
        int sign = 1;
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            lx.next();
        } else if (!first) {
            throw ParseError("expected + or - between cyclotomic terms");
        }
        first = false;
        Rational mag(1);
        long e = 0;
        bool have_scalar = false, have_z = false;
        char p = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(p))) {
            mag = Rational::from_string(lx.number());
            have_scalar = true;
        }
        if ((have_scalar && lx.eat('*')) || lx.peek() == 'z') {
            if (lx.peek() != 'z') throw ParseError("expected z after * in cyclotomic scalar");
            lx.next();
            have_z = true;
            e = lx.eat('^') ? lx.integer() : 1;
        }
        if (!have_scalar && !have_z) throw ParseError("empty term in cyclotomic scalar");
        put(e, sign < 0 ? -mag : mag);
    }
    return coeffs;
}

template <class K>
K parse_bracket_scalar(Lexer& lx, int r);

template <>
inline Rational parse_bracket_scalar<Rational>(Lexer&, int) {
    throw ParseError("bracketed cyclotomic scalar in a rational polynomial");
}

template <>
inline Cyclotomic parse_bracket_scalar<Cyclotomic>(Lexer& lx, int r) {
    std::vector<Rational> coeffs = parse_zpoly(lx);
    if (!lx.eat(']')) throw ParseError("unterminated cyclotomic scalar");
    return Cyclotomic(r, std::move(coeffs));
}

} // namespace detail

/// Parse the polynomial text format over the given variable set. For
/// K = Cyclotomic, r is the conductor used for bracketed scalars.
template <class K>
Poly<K> parse_poly(const std::string& text, Vars vars, int r = 1) {
    vars.validate();
    detail::Lexer lx{text};
    Poly<K> out(vars);
    bool first = true;
    while (true) {
        char c = lx.peek();
        if (c == '\0') break;
        int sign = 1;
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            lx.next();
        } else if (!first) {
            throw ParseError("expected + or - between terms in '" + text + "'");
        }
        first = false;

        K coeff(1);
        std::vector<int> exps(vars.count(), 0);
        bool any_factor = false;
        while (true) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                coeff *= K(Rational::from_string(lx.number()));
                any_factor = true;
            } else if (p == '[') {
                lx.next();
                coeff *= detail::parse_bracket_scalar<K>(lx, r);
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(p))) {
                std::string nm = lx.name();
                int idx = vars.index_of(nm);
                if (idx < 0)
                    throw ParseError("unknown variable '" + nm + "' for " + vars.describe());
                long e = lx.eat('^') ? lx.integer() : 1;
                exps[idx] += static_cast<int>(e);
                any_factor = true;
            } else {
                throw ParseError(std::string("unexpected character '") + p + "' in '" + text + "'");
            }
            if (!lx.eat('*')) break;
        }
        if (!any_factor) throw ParseError("empty term in '" + text + "'");
        if (sign < 0) coeff = -coeff;
        out += Poly<K>::from_term(vars, exps, coeff);
    }
    if (first) throw ParseError("empty polynomial text");
    return out;
}

inline PolyQ parse_q(const std::string& text, Vars vars) {
    return parse_poly<Rational>(text, vars);
}

inline PolyC parse_c(const std::string& text, Vars vars, int r) {
    return parse_poly<Cyclotomic>(text, vars, r);
}

} // namespace multider
