#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pinchgeo {

/// Syntax error in an expression string; `column` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Compiled arithmetic expression in the parameters u1..un.
///
/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | '+' unary | power
///   power  := atom ('^' unary)?
///   atom   := number | 'pi' | 'e' | 'u' digits | func '(' args ')' | '(' expr ')'
/// Functions: sin cos tan exp log sqrt abs pow(a, b).
class Expression {
public:
    static Expression parse(const std::string& text);

    double evaluate(std::span<const double> u) const;

    /// Largest parameter index referenced (u3 -> 3); 0 for constants.
    int arity() const { return arity_; }
    const std::string& text() const { return text_; }

private:
    enum class Op { Const, Param, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Tan, Exp, Log, Sqrt, Abs };
    struct Node {
        Op op;
        double value = 0.0;
        int param = 0;
        int lhs = -1;
        int rhs = -1;
    };
    friend class ExpressionParser;

    double eval_node(int id, std::span<const double> u) const;

    std::string text_;
    std::vector<Node> nodes_;
    int root_ = -1;
    int arity_ = 0;
};

}  // namespace pinchgeo
