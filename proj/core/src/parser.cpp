#include "hyperfield/parser.hpp"

#include <cctype>

#include "hyperfield/errors.hpp"

namespace hyperfield {

namespace {

struct Token {
    enum class Kind { Number, Omega, Eps, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    Rational value;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, 0, start};
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; current_ = {Token::Kind::Plus, 0, start}; return;
            case '-': ++pos_; current_ = {Token::Kind::Minus, 0, start}; return;
            case '*': ++pos_; current_ = {Token::Kind::Star, 0, start}; return;
            case '/': ++pos_; current_ = {Token::Kind::Slash, 0, start}; return;
            case '^': ++pos_; current_ = {Token::Kind::Caret, 0, start}; return;
            case '(': ++pos_; current_ = {Token::Kind::LParen, 0, start}; return;
            case ')': ++pos_; current_ = {Token::Kind::RParen, 0, start}; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int numer = digits();
            Int denom = 1;
            // "p/q" is one literal when a digit follows the slash
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                denom = digits();
                if (denom == 0) throw SyntaxError("zero denominator in literal", start);
            }
            current_ = {Token::Kind::Number, Rational(numer, denom), start};
            return;
        }
        if (c == 'w') {
            ++pos_;
            current_ = {Token::Kind::Omega, 0, start};
            return;
        }
        if (text_.substr(pos_, 3) == "eps") {
            pos_ += 3;
            current_ = {Token::Kind::Eps, 0, start};
            return;
        }
        throw SyntaxError("unexpected character", start);
    }

    Int digits() {
        Int n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return n;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

using AstPtr = std::unique_ptr<Ast>;

AstPtr node(Ast::Kind kind, Rational value = 0, AstPtr lhs = nullptr, AstPtr rhs = nullptr) {
    return std::make_unique<Ast>(Ast{kind, std::move(value), std::move(lhs), std::move(rhs)});
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    AstPtr run() {
        AstPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw SyntaxError("trailing input", lex_.peek().pos);
        return e;
    }

private:
    AstPtr expr() {
        AstPtr lhs = term();
        while (true) {
            auto k = lex_.peek().kind;
            if (k != Token::Kind::Plus && k != Token::Kind::Minus) return lhs;
            lex_.take();
            lhs = node(k == Token::Kind::Plus ? Ast::Kind::Add : Ast::Kind::Sub, 0,
                       std::move(lhs), term());
        }
    }

    AstPtr term() {
        AstPtr lhs = factor();
        while (true) {
            auto k = lex_.peek().kind;
            if (k != Token::Kind::Star && k != Token::Kind::Slash) return lhs;
            lex_.take();
            lhs = node(k == Token::Kind::Star ? Ast::Kind::Mul : Ast::Kind::Div, 0,
                       std::move(lhs), factor());
        }
    }

    AstPtr factor() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            return node(Ast::Kind::Neg, 0, factor());
        }
        AstPtr a = atom();
        if (lex_.peek().kind == Token::Kind::Caret) {
            Token caret = lex_.take();
            if (a->kind != Ast::Kind::Omega && a->kind != Ast::Kind::Eps)
                throw PowerBaseNotOmega(caret.pos);
            return node(Ast::Kind::Pow, exponent(), std::move(a));
        }
        return a;
    }

    AstPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number: return node(Ast::Kind::Number, t.value);
            case Token::Kind::Omega: return node(Ast::Kind::Omega);
            case Token::Kind::Eps: return node(Ast::Kind::Eps);
            case Token::Kind::LParen: {
                AstPtr e = expr();
                expect_rparen();
                return e;
            }
            default:
                throw SyntaxError("expected a value", t.pos);
        }
    }

    Rational exponent() {
        bool parenthesized = false;
        if (lex_.peek().kind == Token::Kind::LParen) {
            parenthesized = true;
            lex_.take();
        }
        bool negative = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            negative = true;
            lex_.take();
        }
        Token t = lex_.take();
        if (t.kind != Token::Kind::Number) throw ExponentNotRational(t.pos);
        if (parenthesized) expect_rparen();
        return negative ? Rational(-t.value) : t.value;
    }

    void expect_rparen() {
        Token t = lex_.take();
        if (t.kind != Token::Kind::RParen) throw SyntaxError("expected ')'", t.pos);
    }

    Lexer lex_;
};

}  // namespace

AstPtr parse(std::string_view text) { return Parser(text).run(); }

Hyper eval(const Ast& ast) {
    switch (ast.kind) {
        case Ast::Kind::Number: return Hyper::from_rational(ast.value);
        case Ast::Kind::Omega: return Hyper::omega();
        case Ast::Kind::Eps: return Hyper::eps();
        case Ast::Kind::Neg: return -eval(*ast.lhs);
        case Ast::Kind::Add: return eval(*ast.lhs) + eval(*ast.rhs);
        case Ast::Kind::Sub: return eval(*ast.lhs) - eval(*ast.rhs);
        case Ast::Kind::Mul: return eval(*ast.lhs) * eval(*ast.rhs);
        case Ast::Kind::Div: return eval(*ast.lhs) / eval(*ast.rhs);
        case Ast::Kind::Pow:
            return Hyper::monomial(ast.lhs->kind == Ast::Kind::Eps ? Rational(-ast.value)
                                                                   : ast.value);
        default:
            throw Error("corrupt expression tree");
    }
}

Hyper eval_expression(std::string_view text) { return eval(*parse(text)); }

}  // namespace hyperfield
