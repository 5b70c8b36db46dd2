#include "pinchgeo/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace pinchgeo {

class ExpressionParser {
public:
    explicit ExpressionParser(const std::string& text) : text_(text) {}

    Expression run() {
        Expression e;
        e.text_ = text_;
        out_ = &e;
        const int root = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        e.root_ = root;
        return e;
    }

private:
    using Op = Expression::Op;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    int push(Expression::Node node) {
        out_->nodes_.push_back(node);
        return static_cast<int>(out_->nodes_.size()) - 1;
    }
    int binary(Op op, int lhs, int rhs) { return push({op, 0.0, 0, lhs, rhs}); }

    int expr() {
        int lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = binary(Op::Add, lhs, term());
            } else if (accept('-')) {
                lhs = binary(Op::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    int term() {
        int lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = binary(Op::Mul, lhs, unary());
            } else if (accept('/')) {
                lhs = binary(Op::Div, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    int unary() {
        if (accept('-')) {
            return binary(Op::Neg, unary(), -1);
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    int power() {
        const int base = atom();
        if (accept('^')) {
            return binary(Op::Pow, base, unary());
        }
        return base;
    }

    int atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of expression");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            const int inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return identifier();
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    int number() {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) {
            fail("malformed number");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return push({Op::Const, value});
    }

    int identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string name = text_.substr(start, pos_ - start);
        if (name == "pi") {
            return push({Op::Const, std::numbers::pi});
        }
        if (name == "e") {
            return push({Op::Const, std::numbers::e});
        }
        if (name.size() > 1 && name[0] == 'u' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos) {
            const int index = std::stoi(name.substr(1));
            if (index < 1) {
                pos_ = start;
                fail("parameters are numbered from u1");
            }
            out_->arity_ = std::max(out_->arity_, index);
            return push({Op::Param, 0.0, index - 1});
        }
        Op op;
        if (name == "sin") {
            op = Op::Sin;
        } else if (name == "cos") {
            op = Op::Cos;
        } else if (name == "tan") {
            op = Op::Tan;
        } else if (name == "exp") {
            op = Op::Exp;
        } else if (name == "log") {
            op = Op::Log;
        } else if (name == "sqrt") {
            op = Op::Sqrt;
        } else if (name == "abs") {
            op = Op::Abs;
        } else if (name == "pow") {
            expect('(');
            const int base = expr();
            expect(',');
            const int exponent = expr();
            expect(')');
            return binary(Op::Pow, base, exponent);
        } else {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        expect('(');
        const int arg = expr();
        expect(')');
        return binary(op, arg, -1);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Expression* out_ = nullptr;
};

Expression Expression::parse(const std::string& text) {
    return ExpressionParser(text).run();
}

double Expression::evaluate(std::span<const double> u) const {
    if (static_cast<int>(u.size()) < arity_) {
        throw std::invalid_argument("expression '" + text_ + "' needs " + std::to_string(arity_) + " parameters");
    }
    return eval_node(root_, u);
}

double Expression::eval_node(int id, std::span<const double> u) const {
    const Node& nd = nodes_[static_cast<std::size_t>(id)];
    switch (nd.op) {
        case Op::Const: return nd.value;
        case Op::Param: return u[static_cast<std::size_t>(nd.param)];
        case Op::Neg: return -eval_node(nd.lhs, u);
        case Op::Add: return eval_node(nd.lhs, u) + eval_node(nd.rhs, u);
        case Op::Sub: return eval_node(nd.lhs, u) - eval_node(nd.rhs, u);
        case Op::Mul: return eval_node(nd.lhs, u) * eval_node(nd.rhs, u);
        case Op::Div: return eval_node(nd.lhs, u) / eval_node(nd.rhs, u);
        case Op::Pow: return std::pow(eval_node(nd.lhs, u), eval_node(nd.rhs, u));
        case Op::Sin: return std::sin(eval_node(nd.lhs, u));
        case Op::Cos: return std::cos(eval_node(nd.lhs, u));
        case Op::Tan: return std::tan(eval_node(nd.lhs, u));
        case Op::Exp: return std::exp(eval_node(nd.lhs, u));
        case Op::Log: return std::log(eval_node(nd.lhs, u));
        case Op::Sqrt: return std::sqrt(eval_node(nd.lhs, u));
        case Op::Abs: return std::abs(eval_node(nd.lhs, u));
    }
    return 0.0;
}

}  // namespace pinchgeo
