// Polynomial text format.
//
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := rational | variable ('^' integer)? | '(' expression ')' ('^' integer)?
//   rational   := integer ('/' positive-integer)?
//
// Whitespace is insignificant. The optional leading sign lets printed output with a
// negative leading coefficient parse back.
#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "artinian/polynomial.hpp"

namespace artinian {

namespace detail {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const std::vector<std::string>& variables)
        : text_(text), vars_(variables) {
        if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxArity)
            throw DomainError("variable list must have 1..8 names");
    }

    Polynomial parse() {
        Polynomial p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    int arity() const { return static_cast<int>(vars_.size()); }

    [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        skip_ws();
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned exponent() {
        Integer e = integer();
        if (e > 100000) fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            Integer den = 1;
            if (accept('/')) {
                den = integer();
                if (den == 0) fail("zero denominator");
            }
            Rational q(num, den);
            q.canonicalize();
            return Polynomial::constant(arity(), q);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')')) fail("expected ')'");
            if (accept('^')) inner = artinian::pow(inner, exponent());
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            int index = -1;
            for (int i = 0; i < arity(); ++i)
                if (vars_[static_cast<std::size_t>(i)] == name) index = i;
            if (index < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            unsigned e = 1;
            if (accept('^')) e = exponent();
            Polynomial p(arity());
            p.add_term(Monomial::variable(arity(), index, static_cast<int>(e)), Rational(1));
            return p;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view text, const std::vector<std::string>& variables) {
    return detail::PolynomialParser(text, variables).parse();
}

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
    std::string out;
    for (int i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += variables.at(static_cast<std::size_t>(i));
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

/// Canonical text: terms in descending grlex order, e.g. "5*x^4 + 2*x*y^2".
inline std::string format_poly(const Polynomial& p, const std::vector<std::string>& variables) {
    if (static_cast<int>(variables.size()) != p.arity()) throw ArityMismatch("variable list length differs from arity");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = m.degree() == 0;
        if (constant) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << '*';
            out << format_monomial(m, variables);
        }
    }
    return out.str();
}

/// x1, x2, ... for arity > 3; x, y, z otherwise.
inline std::vector<std::string> default_variables(int arity) {
    static const char* small[] = {"x", "y", "z"};
    std::vector<std::string> out;
    for (int i = 0; i < arity; ++i)
        out.push_back(arity <= 3 ? std::string(small[i]) : "x" + std::to_string(i + 1));
    return out;
}

}  // namespace artinian
