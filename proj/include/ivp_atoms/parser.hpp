#pragma once

// Recursive-descent parser for factored expressions in the variable x:
//
//   expr   := [int '*'] factor { '*' factor } [ '/' posint ]
//           | int [ '/' posint ]
//   factor := '(' poly ')' [ '^' posint ]
//   poly   := [sign] term { sign term }
//   term   := [nat ['*']] 'x' ['^' nat] | nat
//
// Whitespace is ignored. A leading '-' before the first factor stands for
// the constant -1.

#include "ivp_atoms/poly.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivp {

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : InputError("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct ParsedFactor {
    IntPoly poly;
    unsigned exponent = 1;
};

struct InputExpression {
    std::string source;
    std::optional<Integer> constant;
    std::vector<ParsedFactor> factors;
    std::optional<Integer> denominator;

    bool is_constant() const { return factors.empty(); }

    /// Factors with exponents expanded into repetitions.
    std::vector<IntPoly> expanded_factors() const {
        std::vector<IntPoly> out;
        for (const auto& f : factors)
            for (unsigned i = 0; i < f.exponent; ++i) out.push_back(f.poly);
        return out;
    }
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    InputExpression expression() {
        InputExpression out;
        out.source = std::string(text_);
        skip();
        if (peek() == '-' && peek_after_sign_is('(')) {
            advance();
            out.constant = Integer(-1);
        } else if (starts_number()) {
            Integer c = signed_integer();
            skip();
            if (at_end() || peek() == '/') {
                out.constant = std::move(c);
                denominator_tail(out);
                expect_end();
                return out;
            }
            expect('*');
            out.constant = std::move(c);
        }
        out.factors.push_back(factor());
        skip();
        while (peek() == '*') {
            advance();
            out.factors.push_back(factor());
            skip();
        }
        denominator_tail(out);
        expect_end();
        return out;
    }

    IntPoly polynomial_only() {
        IntPoly p = poly();
        expect_end();
        return p;
    }

private:
    void denominator_tail(InputExpression& out) {
        skip();
        if (peek() != '/') return;
        advance();
        skip();
        const std::size_t line = line_, col = column_;
        Integer b = natural("denominator");
        if (b == 0) throw ParseError("zero denominator", line, col);
        out.denominator = std::move(b);
    }

    ParsedFactor factor() {
        skip();
        expect('(');
        ParsedFactor f;
        f.poly = poly();
        skip();
        expect(')');
        skip();
        if (peek() == '^') {
            advance();
            skip();
            const std::size_t line = line_, col = column_;
            const Integer e = natural("exponent");
            if (e == 0 || e > 1000) throw ParseError("exponent must be between 1 and 1000", line, col);
            f.exponent = static_cast<unsigned>(e);
        }
        return f;
    }

    IntPoly poly() {
        std::vector<Integer> coeffs;
        auto add = [&](std::size_t degree, const Integer& c) {
            if (coeffs.size() <= degree) coeffs.resize(degree + 1);
            coeffs[degree] += c;
        };
        skip();
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                advance();
                skip();
            } else if (!first) {
                break;
            }
            first = false;
            Integer c = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = natural("coefficient");
                skip();
                if (peek() == '*') {
                    advance();
                    skip();
                } else if (!is_variable_start()) {
                    add(0, sign * c);
                    continue;
                }
            } else if (!is_variable_start()) {
                fail("expected a term");
            }
            expect_variable();
            skip();
            std::size_t degree = 1;
            if (peek() == '^') {
                advance();
                skip();
                const std::size_t line = line_, col = column_;
                const Integer d = natural("degree");
                if (d > 10000) throw ParseError("degree too large", line, col);
                degree = static_cast<std::size_t>(d);
            }
            add(degree, sign * c);
        }
        return IntPoly(std::move(coeffs));
    }

    bool is_variable_start() const { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

    void expect_variable() {
        skip();
        if (!is_variable_start()) fail("expected 'x'");
        if (peek() != 'x') {
            std::string name;
            const std::size_t line = line_, col = column_;
            while (std::isalnum(static_cast<unsigned char>(peek()))) {
                name += peek();
                advance();
            }
            throw ParseError("unknown variable '" + name + "'", line, col);
        }
        advance();
        if (std::isalnum(static_cast<unsigned char>(peek()))) fail("unknown variable");
    }

    bool starts_number() const {
        if (std::isdigit(static_cast<unsigned char>(peek()))) return true;
        if ((peek() == '-' || peek() == '+') && pos_ + 1 < text_.size()) {
            std::size_t i = pos_ + 1;
            while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
            return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
        }
        return false;
    }

    bool peek_after_sign_is(char c) const {
        std::size_t i = pos_ + 1;
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        return i < text_.size() && text_[i] == c;
    }

    Integer signed_integer() {
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            advance();
            skip();
        }
        return sign * natural("integer");
    }

    Integer natural(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return Integer(digits);
    }

    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    void expect_end() {
        skip();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(at_end() ? message + " at end of input" : message, line_, column_);
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace detail

inline InputExpression parse_expression(std::string_view source) {
    return detail::Parser(source).expression();
}

/// A single polynomial without the factored-expression structure, e.g.
/// "x^3-x".
inline IntPoly parse_polynomial(std::string_view source) { return detail::Parser(source).polynomial_only(); }

} // namespace ivp
