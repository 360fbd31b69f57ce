#pragma once
// Recursive-descent parser for exact expressions over a PBW presentation.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | base ('^' UINT)?
//   base   := UINT | 'lambda' | 'mu' | 'sqrt' '(' INT ')' | GEN | '(' expr ')'
//
// '/' requires both operands to be scalar-valued.  Generator names come from
// the presentation; an identifier the presentation lacks is a presentation
// mismatch, not a syntax error.  Errors carry a 1-based column.

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dua/errors.hpp"
#include "dua/ncpoly.hpp"

namespace dua {

namespace detail {

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    int column; // 1-based position of the first character
};

inline std::vector<Token> lex_expression(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({TokKind::Number, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({TokKind::Ident, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        TokKind k;
        switch (c) {
            case '+': k = TokKind::Plus; break;
            case '-': k = TokKind::Minus; break;
            case '*': k = TokKind::Star; break;
            case '/': k = TokKind::Slash; break;
            case '^': k = TokKind::Caret; break;
            case '(': k = TokKind::LParen; break;
            case ')': k = TokKind::RParen; break;
            default:
                throw ParseError(col, "a number, name, operator, or parenthesis",
                                 std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), col});
        ++i;
    }
    out.push_back({TokKind::End, "", static_cast<int>(src.size()) + 1});
    return out;
}

/// Either a coefficient-field element or an algebra element.  Scalars stay
/// scalar as long as possible so '/' and field promotion behave exactly.
struct ParsedValue {
    std::variant<Scalar, NcPoly> v;

    bool is_scalar() const { return std::holds_alternative<Scalar>(v); }
    const Scalar& scalar() const { return std::get<Scalar>(v); }
    const NcPoly& poly() const { return std::get<NcPoly>(v); }
};

class ExpressionParser {
public:
    // pres may be null: scalar-only mode, where generator names are rejected.
    ExpressionParser(const std::string& src, PresentationPtr pres)
        : toks_(lex_expression(src)), pres_(std::move(pres)) {}

    ParsedValue run() {
        ParsedValue v = expr();
        if (peek().kind != TokKind::End)
            throw ParseError(peek().column, "end of expression",
                             "trailing input '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token eat() { return toks_[pos_++]; }

    bool accept(TokKind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    Token expect(TokKind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError(peek().column, what, "found '" + describe(peek()) + "'");
        return eat();
    }

    static std::string describe(const Token& t) {
        return t.kind == TokKind::End ? "end of expression" : t.text;
    }

    ParsedValue expr() {
        ParsedValue acc = term();
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            bool minus = eat().kind == TokKind::Minus;
            ParsedValue rhs = term();
            acc = combine_additive(std::move(acc), std::move(rhs), minus);
        }
        return acc;
    }

    ParsedValue term() {
        ParsedValue acc = factor();
        while (peek().kind == TokKind::Star || peek().kind == TokKind::Slash) {
            Token op = eat();
            ParsedValue rhs = factor();
            if (op.kind == TokKind::Slash) {
                if (!acc.is_scalar() || !rhs.is_scalar())
                    throw ParseError(op.column, "scalar operands for '/'",
                                     "division is only defined in the coefficient field");
                auto [a, b] = unify_scalars(acc.scalar(), rhs.scalar());
                if (b.is_zero()) throw ParseError(op.column, "a nonzero divisor", "division by zero");
                acc = ParsedValue{a / b};
            } else {
                acc = combine_multiplicative(std::move(acc), std::move(rhs));
            }
        }
        return acc;
    }

    ParsedValue factor() {
        if (accept(TokKind::Minus)) {
            ParsedValue v = factor();
            if (v.is_scalar()) return ParsedValue{-v.scalar()};
            return ParsedValue{-v.poly()};
        }
        ParsedValue b = base();
        if (accept(TokKind::Caret)) {
            Token e = expect(TokKind::Number, "a nonnegative integer exponent");
            long n = std::stol(e.text);
            if (b.is_scalar()) return ParsedValue{b.scalar().pow(n)};
            return ParsedValue{b.poly().pow(static_cast<unsigned>(n))};
        }
        return b;
    }

    ParsedValue base() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::Number: {
                Token n = eat();
                return ParsedValue{Scalar(mpq_class(n.text))};
            }
            case TokKind::LParen: {
                eat();
                ParsedValue v = expr();
                expect(TokKind::RParen, "')'");
                return v;
            }
            case TokKind::Ident: return ident();
            default:
                throw ParseError(t.column, "a number, name, '-', or '('",
                                 "found '" + describe(t) + "'");
        }
    }

    ParsedValue ident() {
        Token t = eat();
        if (t.text == "lambda") return ParsedValue{Scalar::lambda()};
        if (t.text == "mu") return ParsedValue{Scalar::mu()};
        if (t.text == "sqrt") {
            expect(TokKind::LParen, "'(' after sqrt");
            bool neg = accept(TokKind::Minus);
            Token n = expect(TokKind::Number, "an integer radicand");
            expect(TokKind::RParen, "')'");
            long v = std::stol(n.text);
            return ParsedValue{Scalar::sqrt_int(neg ? -v : v)};
        }
        if (!pres_)
            throw ParseError(t.column, "a scalar expression",
                             "'" + t.text + "' is not a coefficient-field element");
        if (int idx = pres_->gen_index(t.text); idx >= 0)
            return ParsedValue{NcPoly::gen(pres_, idx)};
        throw PresentationMismatch("generator '" + t.text + "' is not part of " + pres_->name());
    }

    ParsedValue combine_additive(ParsedValue a, ParsedValue b, bool minus) {
        if (a.is_scalar() && b.is_scalar()) {
            auto [x, y] = unify_scalars(a.scalar(), b.scalar());
            return ParsedValue{minus ? x - y : x + y};
        }
        NcPoly pa = to_poly(std::move(a));
        NcPoly pb = to_poly(std::move(b));
        return ParsedValue{minus ? pa - pb : pa + pb};
    }

    ParsedValue combine_multiplicative(ParsedValue a, ParsedValue b) {
        if (a.is_scalar() && b.is_scalar()) {
            auto [x, y] = unify_scalars(a.scalar(), b.scalar());
            return ParsedValue{x * y};
        }
        // coefficients are central, so scalar * poly = poly * scalar
        if (a.is_scalar()) return ParsedValue{b.poly() * a.scalar()};
        if (b.is_scalar()) return ParsedValue{a.poly() * b.scalar()};
        return ParsedValue{a.poly() * b.poly()};
    }

    NcPoly to_poly(ParsedValue v) {
        if (!v.is_scalar()) return v.poly();
        return NcPoly::scalar(pres_, v.scalar().promoted(pres_->context()));
    }

    std::vector<Token> toks_;
    PresentationPtr pres_;
    size_t pos_ = 0;
};

} // namespace detail

/// Parse an expression and normalize it in the given presentation.
inline NcPoly parse_expression(const std::string& src, PresentationPtr pres) {
    detail::ExpressionParser p(src, pres);
    detail::ParsedValue v = p.run();
    if (v.is_scalar()) return NcPoly::scalar(pres, v.scalar().promoted(pres->context()));
    return v.poly();
}

/// Parse a coefficient-field element; generator names are rejected.
inline Scalar parse_scalar(const std::string& src) {
    detail::ExpressionParser p(src, nullptr);
    detail::ParsedValue v = p.run();
    return v.scalar();
}

} // namespace dua
