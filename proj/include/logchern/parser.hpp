#pragma once

#include "logchern/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace logchern {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Recursive-descent parser for polynomial text over a fixed ambient ring.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' nat)?
//   atom   := rational | variable | '(' expr ')'
//
// Rationals are written n or n/d; juxtaposition is not multiplication.
class Parser {
public:
    Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos_; acc += parse_term(); }
            else if (c == '-') { ++pos_; acc -= parse_term(); }
            else break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        if (accept('-')) return -parse_factor();
        Polynomial base = parse_atom();
        if (accept('^')) {
            std::uint32_t e = parse_nat();
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, parse_rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = parse_ident();
            auto idx = ring_->index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(ring_, *idx);
        }
        throw ParseError(c == '\0' ? "unexpected end of input"
                                   : std::string("unexpected character '") + c + "'",
                         pos_);
    }

    std::uint32_t parse_nat() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected exponent", pos_);
        unsigned long val = 0;
        try {
            val = std::stoul(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", start);
        }
        if (val > 1u << 20) throw ParseError("exponent out of range", start);
        return static_cast<std::uint32_t>(val);
    }

    Rational parse_rational() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Integer num(std::string(text_.substr(start, pos_ - start)));
        // '/' continues the literal only when directly followed by digits
        if (pos_ < text_.size() && text_[pos_] == '/') {
            std::size_t save = pos_++;
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected denominator digits", save + 1);
            Integer den(std::string(text_.substr(dstart, pos_ - dstart)));
            if (den == 0) throw ParseError("zero denominator", dstart);
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
};

inline Polynomial parse(std::string_view text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

} // namespace logchern
