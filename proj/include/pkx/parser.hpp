#pragma once

// Recursive-descent parser for the expression grammar:
//
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := ('-')* power
//   power   := primary ('^' factor)?
//   primary := integer | 'I' | symbol | function '(' expr ')' | '(' expr ')'
//
// '^' is right-associative, unary minus binds looser than '^', whitespace is
// insignificant. Rational literals like 1/2 fall out of constant folding in
// the product/power constructors. sqrt(x) is accepted and read as x^(1/2).

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "pkx/errors.hpp"
#include "pkx/expr.hpp"

namespace pkx {

namespace detail {

inline std::optional<Func> func_from_name(std::string_view name) {
    struct Entry { const char* name; Func f; };
    static constexpr Entry table[] = {
        {"exp", Func::Exp}, {"ln", Func::Ln},
        {"sin", Func::Sin}, {"cos", Func::Cos}, {"tan", Func::Tan},
        {"sinh", Func::Sinh}, {"cosh", Func::Cosh}, {"tanh", Func::Tanh},
        {"arcsin", Func::Arcsin}, {"arccos", Func::Arccos}, {"arctan", Func::Arctan},
        {"arcsinh", Func::Arcsinh}, {"arccosh", Func::Arccosh}, {"arctanh", Func::Arctanh},
    };
    for (const auto& e : table)
        if (name == e.name) return e.f;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("end of input");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(pos_, "parse error at offset " + std::to_string(pos_) +
                                   ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    ExprPtr parse_expr() {
        std::vector<ExprPtr> terms;
        terms.push_back(parse_term());
        while (true) {
            char c = peek();
            if (c == '+') { ++pos_; terms.push_back(parse_term()); }
            else if (c == '-') { ++pos_; terms.push_back(expr_neg(parse_term())); }
            else break;
        }
        return terms.size() == 1 ? terms[0] : make_sum(std::move(terms));
    }

    ExprPtr parse_term() {
        ExprPtr acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') { ++pos_; acc = make_product({acc, parse_factor()}); }
            else if (c == '/') { ++pos_; acc = expr_div(acc, parse_factor()); }
            else break;
        }
        return acc;
    }

    ExprPtr parse_factor() {
        int signs = 0;
        while (eat('-')) ++signs;
        ExprPtr e = parse_power();
        return (signs % 2) ? expr_neg(std::move(e)) : e;
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (eat('^')) return make_power(std::move(base), parse_factor());
        return base;
    }

    ExprPtr parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (!eat(')')) fail("')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            return make_rational(Rational(BigInt(std::string(src_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string_view name = src_.substr(start, pos_ - start);
            if (name == "I") return make_imaginary_unit();
            if (name == "sqrt") {
                if (!eat('(')) fail("'(' after sqrt");
                ExprPtr arg = parse_expr();
                if (!eat(')')) fail("')'");
                return make_power(std::move(arg), Rational(1, 2));
            }
            if (auto f = detail::func_from_name(name)) {
                if (!eat('(')) fail(std::string("'(' after ") + std::string(name));
                ExprPtr arg = parse_expr();
                if (!eat(')')) fail("')'");
                return make_apply(*f, std::move(arg));
            }
            return make_symbol(std::string(name));
        }
        fail("a number, symbol, function call or '('");
    }
};

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).run(); }

}  // namespace pkx
