#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "jacobi_kit/symcore/expr.hpp"

namespace jacobi_kit::symcore {

// Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')? atom ('^' signed_int)?
//   atom   := rational_literal | identifier | '(' expr ')'
// Rational literals are digit runs with an optional fractional part;
// both convert exactly. Printing emits a form this grammar reparses.

namespace parse_detail {

class Parser {
public:
    Parser(std::string_view src, const Chart& chart) : src_(src), chart_(chart) {}

    Expr run() {
        Expr e = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    Expr expr() {
        Expr e = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                e += term();
            } else if (peek() == '-') {
                ++pos_;
                e -= term();
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Expr e = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                e *= factor();
            } else if (peek() == '/') {
                std::size_t op_pos = pos_;
                ++pos_;
                Expr rhs = factor();
                if (rhs.is_zero())
                    throw ParseError("division by zero", op_pos);
                e /= rhs;
            } else {
                return e;
            }
        }
    }

    Expr factor() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        Expr a = atom();
        skip_ws();
        if (peek() == '^') {
            std::size_t op_pos = pos_;
            ++pos_;
            long long k = signed_int();
            if (k < 0 && a.is_zero())
                throw ParseError("division by zero", op_pos);
            a = a.pow(k);
        }
        return neg ? -a : a;
    }

    Expr atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Expr number() {
        std::size_t start = pos_;
        Integer int_part = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            int_part = int_part * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        Rational value(int_part);
        if (peek() == '.') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected digits after decimal point", pos_);
            Integer frac = 0, scale = 1;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                frac = frac * 10 + (src_[pos_] - '0');
                scale *= 10;
                ++pos_;
            }
            value += Rational(frac) / Rational(scale);
        }
        (void)start;
        return Expr::constant(chart_, value);
    }

    Expr identifier() {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string name(src_.substr(start, pos_ - start));
        auto idx = chart_.index_of(name);
        if (!idx) throw ParseError("unknown identifier '" + name + "'", start);
        return Expr::coordinate(chart_, *idx);
    }

    long long signed_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer exponent", pos_);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > (1ll << 40)) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    std::string_view src_;
    const Chart& chart_;
    std::size_t pos_ = 0;
};

}  // namespace parse_detail

/// Parse `source` over the chart's coordinates into a canonical Expr.
inline Expr parse(std::string_view source, const Chart& chart) {
    return parse_detail::Parser(source, chart).run();
}

/// Parse an exact rational literal like "3", "-5/2" or "0.25".
inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { throw Error("invalid rational literal '" + std::string(s) + "'"); };
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    auto digits = [&](Integer& out) {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) bad();
        out = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            out = out * 10 + (s[i++] - '0');
    };
    Integer num;
    digits(num);
    Rational value(num);
    if (i < s.size() && s[i] == '/') {
        ++i;
        Integer den;
        digits(den);
        if (den == 0) throw DivisionByZero("zero denominator in rational literal");
        value = Rational(num) / Rational(den);
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        Integer frac = 0, scale = 1;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) bad();
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            frac = frac * 10 + (s[i++] - '0');
            scale *= 10;
        }
        value += Rational(frac) / Rational(scale);
    }
    if (i != s.size()) bad();
    return neg ? -value : value;
}

}  // namespace jacobi_kit::symcore
