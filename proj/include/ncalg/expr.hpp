#pragma once

// Text syntax for scalars and noncommutative polynomials.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/'|<juxtaposition>) factor)*
//   factor  := '-' factor | primary ['^' ['-'] integer]
//   primary := number | identifier | '(' expr ')'
//
// Identifiers resolve to generators first, then to scalar symbols
// ("q" in Q(q), "z" for zeta in Q(zeta_l), or explicit bindings).

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncalg/error.hpp"
#include "ncalg/freealg.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

using ScalarSymbols = std::map<std::string, Scalar>;

inline ScalarSymbols default_symbols(const Field& f) {
    ScalarSymbols s;
    if (f.kind == FieldKind::cyclotomic || f.kind == FieldKind::rational_function)
        s.emplace(f.generator_name(), f.generator());
    return s;
}

namespace detail {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    int column;
};

inline std::vector<Token> tokenize(std::string_view s, int line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        const int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '.') {
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
                if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                    j = k;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                }
            }
            out.push_back({Tok::number, std::string(s.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default: throw parse_error(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({k, std::string(1, c), col});
        ++i;
    }
    out.push_back({Tok::end, "", static_cast<int>(s.size()) + 1});
    return out;
}

class ExprParser {
public:
    ExprParser(std::string_view text, AlphabetPtr alphabet, Field field, const ScalarSymbols& symbols, int line)
        : toks_(tokenize(text, line)), alphabet_(std::move(alphabet)), field_(field), symbols_(symbols), line_(line) {}

    NcPoly parse_all() {
        if (peek().kind == Tok::end) fail("empty expression");
        NcPoly p = expr();
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, peek().column); }

    NcPoly constant(const Scalar& s) const { return NcPoly::constant(alphabet_, field_, s); }
    static bool is_constant(const NcPoly& p) { return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty()); }
    Scalar constant_value(const NcPoly& p) const { return p.is_zero() ? field_.zero() : p.terms().begin()->second; }

    NcPoly expr() {
        bool negate = false;
        if (peek().kind == Tok::plus || peek().kind == Tok::minus) negate = take().kind == Tok::minus;
        NcPoly acc = term();
        if (negate) acc = -acc;
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool minus = take().kind == Tok::minus;
            NcPoly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    bool starts_factor(Tok k) const { return k == Tok::number || k == Tok::ident || k == Tok::lparen; }

    NcPoly term() {
        NcPoly acc = factor();
        for (;;) {
            const Tok k = peek().kind;
            if (k == Tok::star) {
                take();
                acc = acc * factor();
            } else if (k == Tok::slash) {
                take();
                NcPoly d = factor();
                if (!is_constant(d)) fail("division by a non-scalar expression");
                const Scalar v = constant_value(d);
                if (v.is_zero()) fail("division by zero");
                acc = acc.scaled(v.inv());
            } else if (starts_factor(k)) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    NcPoly factor() {
        if (peek().kind == Tok::minus) {
            take();
            return -factor();
        }
        NcPoly base = primary();
        if (peek().kind != Tok::caret) return base;
        take();
        bool neg = false;
        if (peek().kind == Tok::minus) {
            take();
            neg = true;
        }
        if (peek().kind != Tok::number) fail("expected integer exponent");
        const Token t = take();
        if (t.text.find_first_not_of("0123456789") != std::string::npos) fail("exponent must be an integer");
        const long e = std::stol(t.text);
        if (neg) {
            if (!is_constant(base)) fail("negative exponent on a non-scalar expression");
            const Scalar v = constant_value(base);
            if (v.is_zero()) fail("zero raised to a negative power");
            return constant(v.pow(-e));
        }
        if (is_constant(base)) return constant(constant_value(base).pow(e));
        return base.pow(static_cast<unsigned>(e));
    }

    NcPoly primary() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::number: {
                take();
                if (t.text.find_first_of(".eE") != std::string::npos) {
                    if (field_.kind != FieldKind::approx_real) fail("decimal literal outside the approximate field");
                    return constant(Scalar::approx(std::stod(t.text)));
                }
                return constant(field_.from_rational(mpq_class(t.text)));
            }
            case Tok::ident: {
                take();
                if (auto l = alphabet_->index_of(t.text)) return NcPoly::monomial(alphabet_, field_, Word{*l});
                if (auto it = symbols_.find(t.text); it != symbols_.end()) {
                    if (!field_.contains(it->second) && !it->second.is_rational())
                        fail("symbol '" + t.text + "' lies outside field " + field_.to_string());
                    return constant(field_.lift(it->second));
                }
                --pos_;
                fail("unknown identifier '" + t.text + "'");
            }
            case Tok::lparen: {
                take();
                NcPoly e = expr();
                if (peek().kind != Tok::rparen) fail("expected ')'");
                take();
                return e;
            }
            default: fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    AlphabetPtr alphabet_;
    Field field_;
    const ScalarSymbols& symbols_;
    int line_;
};

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace detail

/// Parses a noncommutative polynomial, e.g. "y*x - q*x*y - 1".
inline NcPoly parse_expression(std::string_view text, const AlphabetPtr& alphabet, const Field& field,
                               const ScalarSymbols& symbols, int line = 1) {
    return detail::ExprParser(text, alphabet, field, symbols, line).parse_all();
}

inline NcPoly parse_expression(std::string_view text, const AlphabetPtr& alphabet, const Field& field) {
    return parse_expression(text, alphabet, field, default_symbols(field));
}

/// Parses a scalar in a known field (no "@ cyclo" suffix needed).
inline Scalar parse_scalar_in(std::string_view text, const Field& field, const ScalarSymbols& symbols) {
    static const AlphabetPtr none = make_alphabet({});
    NcPoly p = parse_expression(text, none, field, symbols);
    return p.is_zero() ? field.zero() : p.terms().begin()->second;
}

inline Scalar parse_scalar_in(std::string_view text, const Field& field) {
    return parse_scalar_in(text, field, default_symbols(field));
}

/// Parses standalone scalar text: "p/q", "z^2 - 1 @ cyclo 8", "(q^2 + 1)/(q - 1)",
/// or a decimal for the approximate field. A field hint overrides detection.
inline Scalar parse_scalar(std::string_view text, std::optional<Field> hint = std::nullopt) {
    std::string s(text);
    const auto at = s.find('@');
    if (at != std::string::npos) {
        const std::string suffix = detail::trim(std::string_view(s).substr(at + 1));
        if (suffix.rfind("cyclo", 0) != 0) throw parse_error("expected '@ cyclo <order>'", 1, static_cast<int>(at) + 1);
        const std::string num = detail::trim(std::string_view(suffix).substr(5));
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad cyclotomic order", 1, static_cast<int>(at) + 1);
        const Field f = Field::cyclo(std::stoi(num));
        if (hint && *hint != f) throw variant_mismatch("scalar field differs from expected " + hint->to_string());
        return parse_scalar_in(std::string_view(s).substr(0, at), f);
    }
    if (hint) return parse_scalar_in(s, *hint);
    if (s.find('q') != std::string::npos) return parse_scalar_in(s, Field::Qq());
    if (s.find_first_of(".eEin") != std::string::npos) {
        const std::string t = detail::trim(s);
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw parse_error("bad real literal", 1, 1);
        }
        if (used != t.size()) throw parse_error("bad real literal", 1, static_cast<int>(used) + 1);
        return Scalar::approx(v);
    }
    return parse_scalar_in(s, Field::Q());
}

}  // namespace ncalg
