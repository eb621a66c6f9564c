#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dres/error.hpp"
#include "dres/ratfun.hpp"

namespace dres {

/// Syntax tree of a rational-function expression in x.
struct Expr {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Number;
    Int number;             ///< Number
    long exponent = 0;      ///< Pow
    std::size_t offset = 0; ///< byte offset of the token that produced the node
    std::vector<Expr> args;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static Expr node(Expr::Kind k, std::size_t at, Expr lhs, Expr rhs) {
        Expr e;
        e.kind = k;
        e.offset = at;
        e.args.push_back(std::move(lhs));
        e.args.push_back(std::move(rhs));
        return e;
    }

    // expr := term (('+' | '-') term)*
    Expr expr() {
        Expr lhs = term();
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('+'))
                lhs = node(Expr::Kind::Add, at, std::move(lhs), term());
            else if (accept('-'))
                lhs = node(Expr::Kind::Sub, at, std::move(lhs), term());
            else
                return lhs;
        }
    }

    // term := unary (('*' | '/') unary)*
    Expr term() {
        Expr lhs = unary();
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('*'))
                lhs = node(Expr::Kind::Mul, at, std::move(lhs), unary());
            else if (accept('/'))
                lhs = node(Expr::Kind::Div, at, std::move(lhs), unary());
            else
                return lhs;
        }
    }

    // unary := ('-' | '+') unary | power
    Expr unary() {
        skip_ws();
        const std::size_t at = pos_;
        if (accept('-')) {
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.offset = at;
            e.args.push_back(unary());
            return e;
        }
        if (accept('+')) return unary();
        return power();
    }

    // power := primary ('^' exponent)?
    Expr power() {
        Expr base = primary();
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        Expr e;
        e.kind = Expr::Kind::Pow;
        e.offset = at;
        e.exponent = exponent();
        e.args.push_back(std::move(base));
        return e;
    }

    // exponent := ['-'] integer | '(' ['-'] integer ')'
    long exponent() {
        const bool paren = accept('(');
        const bool negative = accept('-');
        skip_ws();
        Int n = integer();
        if (paren && !accept(')')) fail("expected ')'");
        if (!n.fits_slong_p()) fail("exponent too large");
        long v = n.get_si();
        return negative ? -v : v;
    }

    Int integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Int(std::string(s_.substr(start, pos_ - start)), 10);
    }

    // primary := integer | 'x' | '(' expr ')'
    Expr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const std::size_t at = pos_;
        const char c = s_[pos_];
        Expr e;
        e.offset = at;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            e.kind = Expr::Kind::Number;
            e.number = integer();
            return e;
        }
        if (c == 'x') {
            ++pos_;
            e.kind = Expr::Kind::Var;
            return e;
        }
        if (accept('(')) {
            e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Exact value of an expression tree. Division by an expression equal to
/// zero is reported as a ParseError at the offending operator.
inline RatFun evaluate(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number:
            return RatFun(Rat(e.number));
        case K::Var:
            return RatFun(Poly::x());
        case K::Neg:
            return -evaluate(e.args[0]);
        case K::Add:
            return evaluate(e.args[0]) + evaluate(e.args[1]);
        case K::Sub:
            return evaluate(e.args[0]) - evaluate(e.args[1]);
        case K::Mul:
            return evaluate(e.args[0]) * evaluate(e.args[1]);
        case K::Div: {
            RatFun d = evaluate(e.args[1]);
            if (d.is_zero()) throw ParseError("division by zero", e.offset);
            return evaluate(e.args[0]) / d;
        }
        case K::Pow: {
            RatFun b = evaluate(e.args[0]);
            if (b.is_zero() && e.exponent < 0) throw ParseError("negative power of zero", e.offset);
            return pow(b, e.exponent);
        }
    }
    throw InternalError("unknown expression node");
}

inline RatFun parse(std::string_view text) { return evaluate(parse_expr(text)); }

}  // namespace dres
