/*
   Copyright 2026 The slicereg authors

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

#ifndef SLICEREG_EXPR_HPP
#define SLICEREG_EXPR_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "slicereg/slice_poly.hpp"
#include "slicereg/star_power.hpp"

namespace slicereg {

/// Expression over {q, decimal, i, j, k} with +, -, * (the *-product), unary
/// minus and postfix ^n. '^' binds tighter than '*', '*' tighter than +/-.
struct Expr {
    enum class Kind {
        Variable,
        Number,
        UnitI,
        UnitJ,
        UnitK,
        Negate,
        Add,
        Subtract,
        Multiply,
        Power
    };
    Kind kind = Kind::Number;
    double value = 0.0;
    int exponent = 0;
    std::vector<Expr> kids;
};

namespace detail {

struct Token {
    enum class Type { Q, I, J, K, Number, Plus, Minus, Star, Caret, LParen, RParen, End };
    Type type;
    std::size_t offset;
    double value = 0.0;
    bool integral = false;
};

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++pos;
            continue;
        }
        Token t{Token::Type::End, pos};
        switch (c) {
            case 'q': t.type = Token::Type::Q; ++pos; break;
            case 'i': t.type = Token::Type::I; ++pos; break;
            case 'j': t.type = Token::Type::J; ++pos; break;
            case 'k': t.type = Token::Type::K; ++pos; break;
            case '+': t.type = Token::Type::Plus; ++pos; break;
            case '-': t.type = Token::Type::Minus; ++pos; break;
            case '*': t.type = Token::Type::Star; ++pos; break;
            case '^': t.type = Token::Type::Caret; ++pos; break;
            case '(': t.type = Token::Type::LParen; ++pos; break;
            case ')': t.type = Token::Type::RParen; ++pos; break;
            default: {
                if (!(c >= '0' && c <= '9') && c != '.')
                    throw error(errc::syntax_error,
                                "unexpected character '" + std::string(1, c) + "'",
                                pos);
                std::size_t start = pos;
                bool integral = true;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                if (pos < text.size() && text[pos] == '.') {
                    integral = false;
                    ++pos;
                    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                }
                if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
                    integral = false;
                    ++pos;
                    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
                    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
                        throw error(errc::syntax_error, "malformed exponent", pos);
                    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                }
                if (pos == start || (pos == start + 1 && text[start] == '.'))
                    throw error(errc::syntax_error, "malformed number", start);
                double v = 0.0;
                auto res = std::from_chars(text.data() + start, text.data() + pos, v);
                if (res.ec != std::errc())
                    throw error(errc::syntax_error, "malformed number", start);
                t.type = Token::Type::Number;
                t.value = v;
                t.integral = integral;
                break;
            }
        }
        out.push_back(t);
    }
    out.push_back(Token{Token::Type::End, text.size()});
    return out;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Expr parse() {
        Expr e = expr();
        if (cur().type != Token::Type::End)
            throw error(errc::syntax_error, "expected '+', '-', '*' or end of input",
                        cur().offset);
        return e;
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    Expr expr() {
        Expr lhs = term();
        while (cur().type == Token::Type::Plus || cur().type == Token::Type::Minus) {
            bool add = cur().type == Token::Type::Plus;
            advance();
            Expr rhs = term();
            Expr node;
            node.kind = add ? Expr::Kind::Add : Expr::Kind::Subtract;
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (cur().type == Token::Type::Star) {
            advance();
            Expr rhs = factor();
            Expr node;
            node.kind = Expr::Kind::Multiply;
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr factor() {
        bool negated = false;
        if (cur().type == Token::Type::Minus) {
            negated = true;
            advance();
        }
        Expr base = atom();
        if (cur().type == Token::Type::Caret) {
            advance();
            if (cur().type != Token::Type::Number || !cur().integral ||
                cur().value < 0)
                throw error(errc::syntax_error,
                            "expected a nonnegative integer exponent", cur().offset);
            Expr node;
            node.kind = Expr::Kind::Power;
            node.exponent = static_cast<int>(cur().value);
            node.kids.push_back(std::move(base));
            advance();
            base = std::move(node);
        }
        if (negated) {
            Expr node;
            node.kind = Expr::Kind::Negate;
            node.kids.push_back(std::move(base));
            base = std::move(node);
        }
        return base;
    }

    Expr atom() {
        Expr e;
        switch (cur().type) {
            case Token::Type::Q: e.kind = Expr::Kind::Variable; break;
            case Token::Type::I: e.kind = Expr::Kind::UnitI; break;
            case Token::Type::J: e.kind = Expr::Kind::UnitJ; break;
            case Token::Type::K: e.kind = Expr::Kind::UnitK; break;
            case Token::Type::Number:
                e.kind = Expr::Kind::Number;
                e.value = cur().value;
                break;
            case Token::Type::LParen: {
                advance();
                Expr inner = expr();
                if (cur().type != Token::Type::RParen)
                    throw error(errc::syntax_error, "expected ')'", cur().offset);
                advance();
                return inner;
            }
            default:
                throw error(errc::syntax_error,
                            "expected 'q', a number, 'i', 'j', 'k' or '('",
                            cur().offset);
        }
        advance();
        return e;
    }
};

inline std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse(); }

/// Canonical printing; parse(print(e)) reproduces e structurally.
inline std::string print(const Expr& e) {
    auto wrap = [](const std::string& s) { return "(" + s + ")"; };
    switch (e.kind) {
        case Expr::Kind::Variable: return "q";
        case Expr::Kind::UnitI: return "i";
        case Expr::Kind::UnitJ: return "j";
        case Expr::Kind::UnitK: return "k";
        case Expr::Kind::Number: return detail::format_number(e.value);
        case Expr::Kind::Negate: {
            const Expr& c = e.kids[0];
            std::string body = print(c);
            bool atomic = c.kind == Expr::Kind::Variable || c.kind == Expr::Kind::UnitI ||
                          c.kind == Expr::Kind::UnitJ || c.kind == Expr::Kind::UnitK ||
                          c.kind == Expr::Kind::Number || c.kind == Expr::Kind::Power;
            return "-" + (atomic ? body : wrap(body));
        }
        case Expr::Kind::Power: {
            const Expr& b = e.kids[0];
            std::string body = print(b);
            bool atomic = b.kind == Expr::Kind::Variable || b.kind == Expr::Kind::UnitI ||
                          b.kind == Expr::Kind::UnitJ || b.kind == Expr::Kind::UnitK ||
                          b.kind == Expr::Kind::Number;
            return (atomic ? body : wrap(body)) + "^" + std::to_string(e.exponent);
        }
        case Expr::Kind::Multiply: {
            const Expr& l = e.kids[0];
            const Expr& r = e.kids[1];
            std::string ls = print(l);
            std::string rs = print(r);
            bool lw = l.kind == Expr::Kind::Add || l.kind == Expr::Kind::Subtract;
            bool rw = r.kind == Expr::Kind::Add || r.kind == Expr::Kind::Subtract ||
                      r.kind == Expr::Kind::Multiply;
            return (lw ? wrap(ls) : ls) + "*" + (rw ? wrap(rs) : rs);
        }
        case Expr::Kind::Add:
        case Expr::Kind::Subtract: {
            const Expr& l = e.kids[0];
            const Expr& r = e.kids[1];
            std::string ls = print(l);
            std::string rs = print(r);
            bool rw = r.kind == Expr::Kind::Add || r.kind == Expr::Kind::Subtract;
            return ls + (e.kind == Expr::Kind::Add ? " + " : " - ") +
                   (rw ? wrap(rs) : rs);
        }
    }
    return {};
}

inline SlicePoly eval_expr(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Variable: return SlicePoly::variable();
        case Expr::Kind::Number:
            return SlicePoly(RealPoly::constant(e.value));
        case Expr::Kind::UnitI: return SlicePoly::constant({0, 1, 0, 0});
        case Expr::Kind::UnitJ: return SlicePoly::constant({0, 0, 1, 0});
        case Expr::Kind::UnitK: return SlicePoly::constant({0, 0, 0, 1});
        case Expr::Kind::Negate: return -eval_expr(e.kids[0]);
        case Expr::Kind::Add: return eval_expr(e.kids[0]) + eval_expr(e.kids[1]);
        case Expr::Kind::Subtract:
            return eval_expr(e.kids[0]) - eval_expr(e.kids[1]);
        case Expr::Kind::Multiply:
            return star_mul(eval_expr(e.kids[0]), eval_expr(e.kids[1]));
        case Expr::Kind::Power:
            return star_power(eval_expr(e.kids[0]), e.exponent);
    }
    return {};
}

inline SlicePoly eval_expr(std::string_view text) { return eval_expr(parse(text)); }

} // namespace slicereg

#endif
