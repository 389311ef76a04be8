#include "galint/parser.hpp"

#include <cctype>

#include "galint/error.hpp"

namespace galint {

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::size_t pos() {
        skip_ws();
        return pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Rational read_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected number", start);
        return rational_from_string(text_.substr(start, pos_ - start));
    }

    long read_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t digits = 0;
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", start);
            ++pos_;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected integer exponent", start);
        return neg ? -v : v;
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() ||
            !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            throw ParseError("expected identifier", start);
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

using NodePtr = std::unique_ptr<ExprAST>;

NodePtr make(ExprAST::Kind k) {
    auto n = std::make_unique<ExprAST>();
    n->kind = k;
    return n;
}

NodePtr binary(ExprAST::Kind k, NodePtr a, NodePtr b) {
    auto n = make(k);
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
}

NodePtr parse_expr(Lexer& lx);

NodePtr parse_base(Lexer& lx) {
    char c = lx.peek();
    if (c == '-') {
        lx.expect('-');
        auto n = make(ExprAST::Kind::Neg);
        n->children.push_back(parse_base(lx));
        return n;
    }
    if (c == '(') {
        lx.expect('(');
        auto inner = parse_expr(lx);
        lx.expect(')');
        return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        auto n = make(ExprAST::Kind::Constant);
        n->value = lx.read_number();
        return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        auto n = make(ExprAST::Kind::Symbol);
        n->name = lx.read_ident();
        return n;
    }
    throw ParseError("unexpected character", lx.pos());
}

NodePtr parse_factor(Lexer& lx) {
    auto base = parse_base(lx);
    if (lx.accept('^')) {
        auto n = make(ExprAST::Kind::Pow);
        n->exponent = lx.read_int();
        n->children.push_back(std::move(base));
        return n;
    }
    return base;
}

NodePtr parse_term(Lexer& lx) {
    auto lhs = parse_factor(lx);
    while (true) {
        if (lx.accept('*'))
            lhs = binary(ExprAST::Kind::Mul, std::move(lhs), parse_factor(lx));
        else if (lx.accept('/'))
            lhs = binary(ExprAST::Kind::Div, std::move(lhs), parse_factor(lx));
        else
            return lhs;
    }
}

NodePtr parse_expr(Lexer& lx) {
    auto lhs = parse_term(lx);
    while (true) {
        if (lx.accept('+'))
            lhs = binary(ExprAST::Kind::Add, std::move(lhs), parse_term(lx));
        else if (lx.accept('-'))
            lhs = binary(ExprAST::Kind::Sub, std::move(lhs), parse_term(lx));
        else
            return lhs;
    }
}

RatFunc eval_ast(const ExprAST& n, const std::set<std::string>& symbols) {
    switch (n.kind) {
        case ExprAST::Kind::Constant:
            return RatFunc(n.value);
        case ExprAST::Kind::Symbol:
            if (!symbols.count(n.name))
                throw InputError("undeclared identifier '" + n.name + "'");
            return RatFunc::variable(n.name);
        case ExprAST::Kind::Add:
            return eval_ast(*n.children[0], symbols) + eval_ast(*n.children[1], symbols);
        case ExprAST::Kind::Sub:
            return eval_ast(*n.children[0], symbols) - eval_ast(*n.children[1], symbols);
        case ExprAST::Kind::Mul:
            return eval_ast(*n.children[0], symbols) * eval_ast(*n.children[1], symbols);
        case ExprAST::Kind::Div: {
            RatFunc d = eval_ast(*n.children[1], symbols);
            if (d.is_zero()) throw MathError("division by the zero polynomial");
            return eval_ast(*n.children[0], symbols) / d;
        }
        case ExprAST::Kind::Neg:
            return -eval_ast(*n.children[0], symbols);
        case ExprAST::Kind::Pow: {
            RatFunc b = eval_ast(*n.children[0], symbols);
            if (b.is_zero() && n.exponent < 0)
                throw MathError("division by the zero polynomial");
            return b.pow(n.exponent);
        }
    }
    throw Error("corrupt expression tree");
}

}  // namespace

std::unique_ptr<ExprAST> parse_to_ast(const std::string& text) {
    Lexer lx(text);
    auto ast = parse_expr(lx);
    if (!lx.eof()) throw ParseError("trailing input", lx.pos());
    return ast;
}

RatFunc parse_expression(const std::string& text, const std::set<std::string>& symbols) {
    return eval_ast(*parse_to_ast(text), symbols);
}

std::string to_expression_string(const RatFunc& r) { return r.to_string(); }

}  // namespace galint
