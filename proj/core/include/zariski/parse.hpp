#pragma once

// Text syntax for field elements, places and rational functions in T.
//
//   element  "3/2", "(x^2+1)/x", "-x^3 + 2x"
//   place    "p:5", "irr:x^2+x+1", "inf"
//   K(T)     "2 + 3/2*T + T^2", "(2+T)/(1+2T)"
//   ideal    "ideal:[6, 4/3]"

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/errors.hpp"
#include "zariski/polyt.hpp"

namespace zariski {

/// Recursive-descent parser for + - * / ^ expressions with integer literals,
/// identifiers and parentheses; juxtaposition multiplies ("2x").
template <class V>
class ExpressionParser {
public:
    using Number = std::function<V(const Integer&)>;
    using Identifier = std::function<std::optional<V>(std::string_view)>;

    ExpressionParser(std::string_view text, Number number, Identifier identifier)
        : text_(text), number_(std::move(number)), identifier_(std::move(identifier)) {}

    V parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty expression");
        V v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    V expr() {
        V acc = term();
        for (;;) {
            skip_space();
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    V term() {
        V acc = unary();
        for (;;) {
            skip_space();
            if (accept('*')) acc = acc * unary();
            else if (accept('/')) acc = acc / unary();
            else if (starts_primary()) acc = acc * power();
            else return acc;
        }
    }

    V unary() {
        skip_space();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    V power() {
        V base = primary();
        skip_space();
        if (!accept('^')) return base;
        skip_space();
        bool negative = accept('-');
        skip_space();
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
        long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + (text_[pos_++] - '0');
            if (e > 1000) fail("exponent too large");
        }
        return base.pow(negative ? -e : e);
    }

    V primary() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            skip_space();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return number_(Integer(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const auto name = text_.substr(start, pos_ - start);
            if (auto v = identifier_(name)) return *v;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    bool starts_primary() const {
        if (pos_ >= text_.size()) return false;
        const auto c = static_cast<unsigned char>(text_[pos_]);
        return c == '(' || std::isalnum(c);
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Number number_;
    Identifier identifier_;
};

template <class D>
Fraction<D> parse_element(const BasePair<D>& base, std::string_view text) {
    ExpressionParser<Fraction<D>> parser(
        text, [&](const Integer& n) { return base.from_rational(Rational(n)); },
        [&](std::string_view id) -> std::optional<Fraction<D>> {
            if (id == "x" && base.kind() != BaseKind::QZ) return base.variable();
            return std::nullopt;
        });
    return parser.parse();
}

template <class D>
RatFunT<D> parse_ratfun(const BasePair<D>& base, std::string_view text) {
    const Fraction<D> one = base.from_int(1);
    ExpressionParser<RatFunT<D>> parser(
        text, [&](const Integer& n) { return RatFunT<D>::constant(base.from_rational(Rational(n))); },
        [&](std::string_view id) -> std::optional<RatFunT<D>> {
            if (id == "T") return RatFunT<D>::indeterminate(one);
            if (id == "x" && base.kind() != BaseKind::QZ) return RatFunT<D>::constant(base.variable());
            return std::nullopt;
        });
    return parser.parse();
}

template <class D>
PolyT<D> parse_polyt(const BasePair<D>& base, std::string_view text) {
    RatFunT<D> h = parse_ratfun(base, text);
    if (h.den().degree() != 0) throw ParseError("\"" + std::string(text) + "\" is not a polynomial in T");
    return h.num();
}

template <class D>
Place<D> parse_place(const BasePair<D>& base, std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "inf") return base.infinity();
    std::string_view body = text;
    if (text.starts_with("p:")) body = text.substr(2);
    else if (text.starts_with("irr:")) body = text.substr(4);
    const Fraction<D> g = parse_element(base, body);
    if (!Domain<D>::is_unit(g.den())) throw ParseError("place generator \"" + std::string(body) + "\" is not in A");
    if constexpr (std::is_same_v<D, Integer>) {
        if (text.starts_with("irr:")) throw ParseError("q-z places use the syntax p:<prime>");
    } else {
        if (text.starts_with("p:")) throw ParseError("polynomial places use the syntax irr:<polynomial>");
    }
    return base.place(g.num());
}

/// "ideal:[g1, g2, ...]" (the "ideal:" prefix is optional).
template <class D>
std::vector<Fraction<D>> parse_generators(const BasePair<D>& base, std::string_view text) {
    if (text.starts_with("ideal:")) text.remove_prefix(6);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("ideal syntax is ideal:[g1, g2, ...]");
    text = text.substr(1, text.size() - 2);
    std::vector<Fraction<D>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size()) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            if (text[i] != ',' || depth != 0) continue;
        }
        out.push_back(parse_element(base, text.substr(start, i - start)));
        start = i + 1;
    }
    return out;
}

} // namespace zariski
