/*
   Copyright 2026 The orefield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OREFIELD_EXPR_HPP
#define OREFIELD_EXPR_HPP

// Expressions over H(t, sigma), its Laurent series and a scalar extension.
// The printed forms of every value type parse back to the same value.
//
//   expr   := term (("+" | "-") term)*
//   term   := unary (("*" | "/") unary)*
//   unary  := "-" unary | power
//   power  := atom ("^" ["-"] INTEGER | "^" "(" ["-"] INTEGER ")")?
//   atom   := INTEGER | NAME | NAME "(" args ")" | "(" expr ")" | "[" ground "]"
//   ground := expr | expr ("," expr)+      (symbolic or coordinate form)

#include <cctype>
#include <cstdlib>
#include <type_traits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "extend.hpp"
#include "ground.hpp"
#include "laurent.hpp"
#include "rational.hpp"
#include "skewfrac.hpp"

namespace orefield {

enum class NodeKind { Number, Name, Ground, Neg, Add, Sub, Mul, Div, Pow, Call };

struct Expr {
    NodeKind kind = NodeKind::Number;
    /// Digits for Number, identifier for Name and Call.
    std::string text;
    /// Exponent of a Pow node.
    long exponent = 0;
    std::vector<Expr> args;
    std::size_t line = 1;
    std::size_t column = 1;
};

namespace detail {

struct Token {
    enum Kind { Int, Ident, Op, End } kind = End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = col;
        std::size_t j = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            tok.kind = Token::Int;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            tok.kind = Token::Ident;
        } else if (std::string("+-*/^()[],").find(c) != std::string::npos) {
            j = i + 1;
            tok.kind = Token::Op;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
        tok.text = src.substr(i, j - i);
        col += j - i;
        i = j;
        out.push_back(std::move(tok));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

class Parser {
   public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    Expr parse() {
        Expr e = expr();
        if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'", peek());
        return e;
    }

   private:
    const Token& peek() const { return toks_[pos_]; }
    bool at(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg, const Token& tok) const {
        throw SyntaxError(msg, tok.line, tok.column);
    }
    // Running out of input is reported at the last token read.
    [[noreturn]] void fail_here(const std::string& what) const {
        if (peek().kind == Token::End) {
            const Token& last = pos_ > 0 ? toks_[pos_ - 1] : peek();
            fail("input ends after '" + last.text + "', expected " + what, last);
        }
        fail("expected " + what + ", found '" + peek().text + "'", peek());
    }
    void expect(const char* op) {
        if (!at(op)) fail_here(std::string("'") + op + "'");
        take();
    }
    static Expr node(NodeKind k, const Token& at, std::vector<Expr> args = {}) {
        Expr e;
        e.kind = k;
        e.line = at.line;
        e.column = at.column;
        e.args = std::move(args);
        return e;
    }

    Expr expr() {
        Expr lhs = term();
        while (at("+") || at("-")) {
            Token op = take();
            Expr rhs = term();
            lhs = node(op.text == "+" ? NodeKind::Add : NodeKind::Sub, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }
    Expr term() {
        Expr lhs = unary();
        while (at("*") || at("/")) {
            Token op = take();
            Expr rhs = unary();
            lhs = node(op.text == "*" ? NodeKind::Mul : NodeKind::Div, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }
    Expr unary() {
        if (at("-")) {
            Token op = take();
            return node(NodeKind::Neg, op, {unary()});
        }
        return power();
    }
    Expr power() {
        Expr base = atom();
        if (!at("^")) return base;
        Token op = take();
        const bool paren = at("(");
        if (paren) take();
        const bool negative = at("-");
        if (negative) take();
        if (peek().kind != Token::Int) fail_here("an integer exponent");
        Token digits = take();
        if (digits.text.size() > 9) fail("exponent too large", digits);
        if (paren) expect(")");
        Expr e = node(NodeKind::Pow, op, {std::move(base)});
        e.exponent = std::stol(digits.text) * (negative ? -1 : 1);
        return e;
    }
    Expr atom() {
        const Token& tok = peek();
        if (tok.kind == Token::Int) {
            Token t = take();
            Expr e = node(NodeKind::Number, t);
            e.text = t.text;
            return e;
        }
        if (tok.kind == Token::Ident) {
            Token t = take();
            Expr e = node(NodeKind::Name, t);
            e.text = t.text;
            if (at("(")) {
                take();
                e.kind = NodeKind::Call;
                e.args.push_back(expr());
                while (at(",")) {
                    take();
                    e.args.push_back(expr());
                }
                expect(")");
            }
            return e;
        }
        if (at("(")) {
            take();
            Expr e = expr();
            expect(")");
            return e;
        }
        if (at("[")) {
            Token open = take();
            Expr e = node(NodeKind::Ground, open, {expr()});
            while (at(",")) {
                take();
                e.args.push_back(expr());
            }
            expect("]");
            return e;
        }
        fail_here("a number, name, '(' or '['");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text into an expression tree; throws SyntaxError with a position.
inline Expr parse_expr(const std::string& text) { return detail::Parser(text).parse(); }

/// What names in an expression refer to.
struct ExprContext {
    const GroundField* field = nullptr;
    /// Gives meaning to x and act(); optional.
    const ExtensionScenario* scenario = nullptr;
    /// Precision used by embed() and tau().
    int precision = kDefaultPrecision;
};

using Value = std::variant<SkewFraction, TwistedSeries, TensorElement>;

inline std::string to_string(const Value& v) {
    return std::visit([](const auto& a) { return to_string(a); }, v);
}

namespace detail {

[[noreturn]] inline void bad_expr(const Expr& e, const std::string& msg) {
    throw SyntaxError(msg, e.line, e.column);
}

inline GroundElement eval_ground(const Expr& e, const GroundField& field) {
    switch (e.kind) {
        case NodeKind::Number:
            return field.from_rational(Rational(Integer(e.text)));
        case NodeKind::Name: {
            if (e.text == "t" || e.text == "x") bad_expr(e, "'" + e.text + "' inside a ground element");
            auto names = field.named_elements();
            auto it = names.find(e.text);
            if (it == names.end()) bad_expr(e, "unknown name '" + e.text + "' in " + field.description());
            return it->second;
        }
        case NodeKind::Neg:
            return -eval_ground(e.args[0], field);
        case NodeKind::Add:
            return eval_ground(e.args[0], field) + eval_ground(e.args[1], field);
        case NodeKind::Sub:
            return eval_ground(e.args[0], field) - eval_ground(e.args[1], field);
        case NodeKind::Mul:
            return eval_ground(e.args[0], field) * eval_ground(e.args[1], field);
        case NodeKind::Div: {
            auto d = eval_ground(e.args[1], field);
            if (d.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in a ground element");
            return eval_ground(e.args[0], field) * d.inverse();
        }
        case NodeKind::Pow: {
            auto b = eval_ground(e.args[0], field);
            if (e.exponent < 0) {
                if (b.is_zero()) throw Error(Errc::DivisionByZero, "negative power of zero");
                b = b.inverse();
            }
            auto r = field.one();
            for (long k = 0; k < std::abs(e.exponent); ++k) r = r * b;
            return r;
        }
        case NodeKind::Ground:
        case NodeKind::Call:
            break;
    }
    bad_expr(e, "not allowed inside a ground element");
}

inline Rational eval_rational(const Expr& e) {
    auto g = eval_ground(e, *fields::rationals());
    return g.coords()[0];
}

inline int lowest_degree(const SkewPolynomial& p) {
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (!p.coeffs()[k].is_zero()) return static_cast<int>(k);
    return 0;
}

/// Series of a fraction precise enough to be combined with s by op.
inline TwistedSeries series_for(const SkewFraction& f, const TwistedSeries& s, bool product) {
    if (!product || f.is_zero()) return ls_embed(f, s.precision());
    const int vf = lowest_degree(f.num()) - lowest_degree(f.den());
    return ls_embed(f, std::max(vf + s.precision() - s.valuation(), vf + 1));
}

class Evaluator {
   public:
    explicit Evaluator(const ExprContext& ctx) : ctx_(ctx) {
        if (ctx_.field == nullptr) throw Error(Errc::InvalidArgument, "expression context without a field");
        if (ctx_.scenario && &ctx_.scenario->field() != ctx_.field)
            throw Error(Errc::MixedFields, "scenario and expression field differ");
    }

    Value eval(const Expr& e) const {
        const GroundField& field = *ctx_.field;
        switch (e.kind) {
            case NodeKind::Number:
            case NodeKind::Ground:
                return SkewFraction::constant(ground(e));
            case NodeKind::Name:
                if (e.text == "t") return SkewFraction::t(field);
                if (e.text == "x") return scenario(e).x();
                return SkewFraction::constant(eval_ground(e, field));
            case NodeKind::Neg:
                return std::visit([](const auto& a) -> Value { return -a; }, eval(e.args[0]));
            case NodeKind::Add:
                return combine(e, eval(e.args[0]), eval(e.args[1]), '+');
            case NodeKind::Sub:
                return combine(e, eval(e.args[0]), eval(e.args[1]), '-');
            case NodeKind::Mul:
                return combine(e, eval(e.args[0]), eval(e.args[1]), '*');
            case NodeKind::Div:
                return combine(e, eval(e.args[0]), inverse(eval(e.args[1])), '*');
            case NodeKind::Pow:
                return power(e, eval(e.args[0]), e.exponent);
            case NodeKind::Call:
                return call(e);
        }
        bad_expr(e, "unknown node");
    }

   private:
    const ExtensionScenario& scenario(const Expr& e) const {
        if (ctx_.scenario == nullptr) bad_expr(e, "'" + e.text + "' needs an extension scenario");
        return *ctx_.scenario;
    }

    GroundElement ground(const Expr& e) const {
        const GroundField& field = *ctx_.field;
        if (e.kind == NodeKind::Number) return eval_ground(e, field);
        if (e.args.size() == 1) return eval_ground(e.args[0], field);
        if (e.args.size() != field.dimension())
            bad_expr(e, "expected " + std::to_string(field.dimension()) + " coordinates, got " +
                            std::to_string(e.args.size()));
        std::vector<Rational> c;
        for (const auto& a : e.args) c.push_back(eval_rational(a));
        return field.element(std::move(c));
    }

    static Value inverse(const Value& v) {
        return std::visit([](const auto& a) -> Value { return a.inverse(); }, v);
    }

    Value combine(const Expr& e, const Value& a, const Value& b, char op) const {
        auto apply = [op](const auto& x, const auto& y) -> Value {
            if (op == '+') return x + y;
            if (op == '-') return x - y;
            return x * y;
        };
        if (a.index() == b.index())
            return std::visit(
                [&](const auto& x) -> Value { return apply(x, std::get<std::decay_t<decltype(x)>>(b)); }, a);
        const bool product = op == '*';
        if (auto f = std::get_if<SkewFraction>(&a)) {
            if (auto s = std::get_if<TwistedSeries>(&b)) return apply(series_for(*f, *s, product), *s);
            const auto& m = std::get<TensorElement>(b);
            return apply(m.scenario().scalar(*f), m);
        }
        if (auto f = std::get_if<SkewFraction>(&b)) {
            if (auto s = std::get_if<TwistedSeries>(&a)) return apply(*s, series_for(*f, *s, product));
            const auto& m = std::get<TensorElement>(a);
            return apply(m, m.scenario().scalar(*f));
        }
        bad_expr(e, "cannot combine a series with an element of the extension; use tau()");
    }

    Value power(const Expr& e, Value base, long n) const {
        if (n < 0) {
            base = inverse(base);
            n = -n;
        }
        if (n == 0)
            return std::visit(
                [](const auto& a) -> Value {
                    using T = std::decay_t<decltype(a)>;
                    if constexpr (std::is_same_v<T, SkewFraction>)
                        return SkewFraction::one(a.field());
                    else if constexpr (std::is_same_v<T, TwistedSeries>)
                        return TwistedSeries::one(a.field(), a.precision() - a.valuation());
                    else
                        return a.scenario().one();
                },
                base);
        Value acc = base;
        std::optional<Value> result;
        while (n > 0) {
            if (n & 1) result = result ? combine(e, *result, acc, '*') : acc;
            n >>= 1;
            if (n > 0) acc = combine(e, acc, acc, '*');
        }
        return *result;
    }

    Value call(const Expr& e) const {
        const auto& f = e.text;
        auto arity = [&](std::size_t lo, std::size_t hi) {
            if (e.args.size() < lo || e.args.size() > hi)
                bad_expr(e, f + "() takes " + std::to_string(lo) + (lo == hi ? "" : " or " + std::to_string(hi)) +
                                " argument" + (hi == 1 ? "" : "s"));
        };
        if (f == "O") {
            arity(1, 1);
            const Expr& a = e.args[0];
            int n = 0;
            if (a.kind == NodeKind::Name && a.text == "t")
                n = 1;
            else if (a.kind == NodeKind::Pow && a.args[0].kind == NodeKind::Name && a.args[0].text == "t")
                n = static_cast<int>(a.exponent);
            else
                bad_expr(a, "O() takes a power of t");
            return TwistedSeries::zero(*ctx_.field, n);
        }
        if (f == "sigma") {
            arity(1, 2);
            const int power = e.args.size() == 2 ? static_cast<int>(integer_arg(e.args[1])) : 1;
            const int order = ctx_.field->order();
            const int p = ((power % order) + order) % order;
            Value v = eval(e.args[0]);
            if (auto m = std::get_if<TensorElement>(&v)) {
                std::vector<SkewFraction> c;
                for (const auto& a : m->coords()) c.push_back(a.sigma(p));
                return m->scenario().element(std::move(c));
            }
            if (auto a = std::get_if<SkewFraction>(&v)) return a->sigma(p);
            return std::get<TwistedSeries>(v).sigma(p);
        }
        if (f == "embed" || f == "tau") {
            arity(1, 1);
            Value v = eval(e.args[0]);
            if (auto a = std::get_if<SkewFraction>(&v)) return ls_embed(*a, ctx_.precision);
            if (auto m = std::get_if<TensorElement>(&v)) {
                if (f == "embed") bad_expr(e, "embed() takes an element of H(t,sigma); use tau()");
                return m->tau(ctx_.precision);
            }
            return v;
        }
        if (f == "act") {
            arity(2, 2);
            const auto& sc = scenario(e);
            const Expr& g = e.args[0];
            if (g.kind != NodeKind::Name) bad_expr(g, "act() takes a group element name first");
            const std::size_t idx = sc.group().index(g.text);
            Value v = eval(e.args[1]);
            if (auto m = std::get_if<TensorElement>(&v)) return m->galois_apply(idx);
            if (std::holds_alternative<SkewFraction>(v)) return v;
            bad_expr(e, "act() takes an element of the extension");
        }
        bad_expr(e, "unknown function '" + f + "'");
    }

    static long integer_arg(const Expr& e) {
        Rational q = eval_rational(e);
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) bad_expr(e, "expected an integer");
        return q.get_num().get_si();
    }

    const ExprContext& ctx_;
};

}  // namespace detail

inline Value evaluate(const Expr& e, const ExprContext& ctx) { return detail::Evaluator(ctx).eval(e); }

inline Value evaluate(const std::string& text, const ExprContext& ctx) { return evaluate(parse_expr(text), ctx); }

/// Canonical print of the value of text.
inline std::string canonicalize(const std::string& text, const ExprContext& ctx) {
    return to_string(evaluate(text, ctx));
}

}  // namespace orefield

#endif  // OREFIELD_EXPR_HPP
