#pragma once

#include <cctype>
#include <string>

#include "zdsolve/polynomial.hpp"
#include "zdsolve/rational.hpp"

namespace zdsolve {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    int line, col;
};

// Recursive-descent parser for the polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' positive-integer]
//   base   := rational | identifier | '(' expr ')'
//   rational := digits ['/' digits]
// Implicit multiplication is not accepted; variables must be declared in the
// ring.
class PolyParser {
public:
    PolyParser(std::string text, VarSetPtr ring) : text_(std::move(text)), ring_(std::move(ring)) {}

    QPoly parse() {
        pos_ = 0;
        line_ = 1;
        col_ = 1;
        QPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    QPoly parse_expr() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        QPoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    QPoly parse_term() {
        QPoly acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    QPoly parse_factor() {
        QPoly base = parse_base();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected positive integer exponent after '^'");
            std::string digits = read_digits();
            unsigned long e = 0;
            try {
                e = std::stoul(digits);
            } catch (...) {
                fail("exponent out of range");
            }
            if (e == 0) fail("exponent must be positive");
            if (e > 100000) fail("exponent out of range");
            return base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    QPoly parse_base() {
        char c = peek();
        if (c == '(') {
            advance();
            QPoly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                advance();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected denominator digits after '/'");
                std::string den = read_digits();
                return QPoly::constant(ring_, Rational(mpz_class(num), mpz_class(den)));
            }
            return QPoly::constant(ring_, Rational(mpz_class(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_ident();
            std::size_t idx = ring_->index_of(name);
            if (idx == VarSet::npos) fail("unknown variable '" + name + "'");
            return QPoly::variable(ring_, idx);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string read_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            advance();
        }
        return s;
    }

    std::string read_ident() {
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            s += text_[pos_];
            advance();
        }
        return s;
    }

    std::string text_;
    VarSetPtr ring_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

inline QPoly parse_poly(const std::string& text, const VarSetPtr& ring) {
    return PolyParser(text, ring).parse();
}

}  // namespace zdsolve
