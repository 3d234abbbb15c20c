/*
 * poly_io.hpp
 *
 * Text form of polynomials.
 *
 * Grammar (no implicit multiplication, '^' only with a literal exponent):
 *   expr    := term (('+' | '-') term)*
 *   term    := factor (('*' | '/') factor)*      division only by a nonzero
 *                                                numeric constant
 *   factor  := '-' factor | primary ('^' nonneg-integer)?
 *   primary := integer | identifier | '(' expr ')'
 *
 * Printing is canonical: terms in descending graded lexicographic order,
 * '*' between every coefficient and variable power, "name^k" with "^1"
 * omitted, unit coefficients omitted except on the constant term, and
 * " + " / " - " separators with a bare '-' prefix on a negative lead.
 * parse(print(p)) == p for every polynomial.
 */
#ifndef PINCERT_POLY_IO_HH
#define PINCERT_POLY_IO_HH

#include <pincert/multipoly.hpp>
#include <pincert/rational.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace pincert {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, VarTable& table, bool grow)
        : text_(text), table_(table), grow_(grow) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly expr() {
        MultiPoly p = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                p += term();
            } else if (c == '-') {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p *= factor();
            } else if (c == '/') {
                std::size_t at = pos_++;
                MultiPoly d = factor();
                if (!d.is_constant())
                    throw parse_error("division only by nonzero numeric constants", at);
                Rational dv = d.to_rational();
                if (dv.is_zero()) throw parse_error("division by zero", at);
                p = p * dv.inverse();
            } else {
                return p;
            }
        }
    }

    MultiPoly factor() {
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        MultiPoly p = primary();
        if (peek() == '^') {
            std::size_t at = pos_++;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw parse_error("'^' requires a nonnegative integer exponent", at);
            BigInt e(integer_digits());
            if (!e.fits_long() || e.to_long() > 1000000L)
                throw parse_error("exponent too large", at);
            p = p.pow(static_cast<unsigned long>(e.to_long()));
        }
        return p;
    }

    MultiPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly(Rational(BigInt(integer_digits())), table_);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name = identifier();
            if (!table_.index_of(name)) {
                if (!grow_) throw parse_error("unknown variable '" + name + "'", at);
                table_.add(name);
            }
            return MultiPoly::variable(table_, name);
        }
        if (c == '\0') throw parse_error("unexpected end of input", pos_);
        throw parse_error("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string integer_digits() {
        skip_ws();
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return s;
    }

    std::string identifier() {
        skip_ws();
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            s += text_[pos_++];
        return s;
    }

    std::string_view text_;
    VarTable& table_;
    std::size_t pos_ = 0;
    bool grow_;
};

}  // namespace detail

// Fixed-table parse: identifiers outside the table are errors.
inline MultiPoly parse_poly(std::string_view text, const VarTable& table) {
    VarTable t = table;
    detail::PolyParser parser(text, t, /*grow=*/false);
    return parser.parse().lift_to(t);
}

// Growing parse: unknown identifiers are appended in order of first
// appearance. Subexpressions may have been built before the table finished
// growing, so the result is lifted onto the final table.
inline MultiPoly parse_poly_grow(std::string_view text, VarTable& table) {
    detail::PolyParser parser(text, table, /*grow=*/true);
    return parser.parse().lift_to(table);
}

inline MultiPoly parse_poly(std::string_view text) {
    VarTable table;
    return parse_poly_grow(text, table);
}

inline std::string monomial_string(const VarTable& table, const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += table.name(i);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

inline std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = c.abs();
        std::string mono = monomial_string(p.table(), e);
        if (mono.empty())
            out += a.str();
        else if (a.is_one())
            out += mono;
        else
            out += a.str() + "*" + mono;
    }
    return out;
}

}  // namespace pincert

#endif
