#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lamarle/dual.hpp"

namespace lamarle {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position;  // byte offset into the source

    friend bool operator==(const Token&, const Token&) = default;
};

/// Splits `source` into tokens, skipping ASCII whitespace. Numbers accept
/// decimal and scientific forms ("2", ".5", "1e-3"). Throws LexError with the
/// offending byte offset.
std::vector<Token> tokenize(std::string_view source);

enum class UnaryOp { Negate };
enum class BinaryOp { Add, Subtract, Multiply, Divide, Power };
enum class Function { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Abs };

std::string_view to_string(Function f) noexcept;

struct ExprNode;

/// Immutable expression tree in the single variable u. Copies share nodes,
/// and concurrent evaluation is safe.
class Expr {
public:
    Expr() = default;

    static Expr constant(double value, std::size_t position = 0);
    static Expr variable(std::size_t position = 0);
    static Expr unary(UnaryOp op, Expr operand, std::size_t position = 0);
    static Expr binary(BinaryOp op, Expr lhs, Expr rhs, std::size_t position = 0);
    static Expr call(Function f, Expr argument, std::size_t position = 0);

    [[nodiscard]] bool empty() const noexcept { return node_ == nullptr; }
    [[nodiscard]] const ExprNode& node() const { return *node_; }

    /// True when the subtree does not reference u.
    [[nodiscard]] bool is_constant() const;

private:
    explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ExprNode> node_;
};

struct ConstantNode {
    double value;
};
struct VariableNode {};
struct UnaryNode {
    UnaryOp op;
    Expr operand;
};
struct BinaryNode {
    BinaryOp op;
    Expr lhs;
    Expr rhs;
};
struct CallNode {
    Function function;
    Expr argument;
};

struct ExprNode {
    std::variant<ConstantNode, VariableNode, UnaryNode, BinaryNode, CallNode> data;
    std::size_t position = 0;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := number | 'u' | func '(' expr ')' | '(' expr ')'
/// Throws ParseError or UnknownFunction.
Expr parse(const std::vector<Token>& tokens);

/// tokenize + parse.
Expr parse_expression(std::string_view source);

/// Throws DomainError (log of non-positive, sqrt of negative, division by
/// zero, non-integer power of a non-positive base, overflow) with the position
/// of the failing node.
double eval(const Expr& expr, double u);

/// Value, first and second u-derivative, exact up to rounding.
Dual2 eval_dual2(const Expr& expr, double u);

/// Text that re-parses to an equivalent tree.
std::string to_string(const Expr& expr);

/// Three component expressions x1(u), x2(u), x3(u) of a curve.
struct CurveSpec {
    std::array<Expr, 3> components;
    std::string source;
};

/// Parses a comma-separated triple "x1, x2, x3".
CurveSpec parse_curve(std::string_view source);

/// Parses three separate component sources.
CurveSpec parse_curve(const std::array<std::string, 3>& components);

}  // namespace lamarle
