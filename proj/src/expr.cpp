#include "lamarle/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>

#include "lamarle/error.hpp"

namespace lamarle {

namespace {

constexpr std::size_t kMaxDepth = 200;

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

struct FunctionName {
    std::string_view name;
    Function function;
};

constexpr FunctionName kFunctions[] = {
    {"sin", Function::Sin},   {"cos", Function::Cos},   {"tan", Function::Tan},
    {"sinh", Function::Sinh}, {"cosh", Function::Cosh}, {"tanh", Function::Tanh},
    {"exp", Function::Exp},   {"log", Function::Log},   {"sqrt", Function::Sqrt},
    {"abs", Function::Abs},
};

const Function* lookup_function(std::string_view name) {
    for (const auto& f : kFunctions) {
        if (f.name == name) return &f.function;
    }
    return nullptr;
}

std::string describe(const Token& t) { return "'" + t.lexeme + "'"; }

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    Expr parse_all() {
        if (tokens_.empty()) {
            throw Error(ErrorCode::ParseError, "empty expression", 0);
        }
        Expr e = expr();
        if (pos_ != tokens_.size()) {
            const Token& t = tokens_[pos_];
            throw Error(ErrorCode::ParseError,
                        "unexpected " + describe(t) + " at offset " + std::to_string(t.position) +
                            ", expected operator or end of input",
                        t.position);
        }
        return e;
    }

private:
    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser, std::size_t position) : p(parser) {
            if (++p.depth_ > kMaxDepth) {
                throw Error(ErrorCode::ParseError, "expression nested too deeply", position);
            }
        }
        ~DepthGuard() { --p.depth_; }
    };

    [[nodiscard]] bool at(TokenKind kind) const { return pos_ < tokens_.size() && tokens_[pos_].kind == kind; }

    [[nodiscard]] std::size_t here() const {
        if (pos_ < tokens_.size()) return tokens_[pos_].position;
        if (tokens_.empty()) return 0;
        const Token& last = tokens_.back();
        return last.position + last.lexeme.size();
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const std::string found = pos_ < tokens_.size() ? describe(tokens_[pos_]) : "end of input";
        throw Error(ErrorCode::ParseError,
                    "expected " + expected + " at offset " + std::to_string(here()) + ", found " + found,
                    here());
    }

    const Token& expect(TokenKind kind, const char* what) {
        if (!at(kind)) fail(what);
        return tokens_[pos_++];
    }

    Expr expr() {
        DepthGuard guard(*this, here());
        Expr lhs = term();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            const Token& op = tokens_[pos_++];
            Expr rhs = term();
            lhs = Expr::binary(op.kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Subtract,
                               std::move(lhs), std::move(rhs), op.position);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (at(TokenKind::Star) || at(TokenKind::Slash)) {
            const Token& op = tokens_[pos_++];
            Expr rhs = factor();
            lhs = Expr::binary(op.kind == TokenKind::Star ? BinaryOp::Multiply : BinaryOp::Divide,
                               std::move(lhs), std::move(rhs), op.position);
        }
        return lhs;
    }

    Expr factor() {
        DepthGuard guard(*this, here());
        if (at(TokenKind::Minus)) {
            const std::size_t p = tokens_[pos_++].position;
            return Expr::unary(UnaryOp::Negate, factor(), p);
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (at(TokenKind::Caret)) {
            const std::size_t p = tokens_[pos_++].position;
            Expr exponent = factor();
            return Expr::binary(BinaryOp::Power, std::move(base), std::move(exponent), p);
        }
        return base;
    }

    Expr atom() {
        if (pos_ >= tokens_.size()) fail("number, 'u', function call or '('");
        const Token& t = tokens_[pos_];
        switch (t.kind) {
            case TokenKind::Number: {
                ++pos_;
                double value = 0.0;
                const char* first = t.lexeme.data();
                const char* last = first + t.lexeme.size();
                const auto [ptr, ec] = std::from_chars(first, last, value);
                if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
                    throw Error(ErrorCode::ParseError, "number out of range: " + t.lexeme, t.position);
                }
                return Expr::constant(value, t.position);
            }
            case TokenKind::Ident: {
                ++pos_;
                if (t.lexeme == "u") return Expr::variable(t.position);
                if (at(TokenKind::LParen)) {
                    const Function* f = lookup_function(t.lexeme);
                    if (f == nullptr) {
                        throw Error(ErrorCode::UnknownFunction, "unknown function '" + t.lexeme + "'",
                                    t.position);
                    }
                    ++pos_;
                    Expr arg = expr();
                    expect(TokenKind::RParen, "')'");
                    return Expr::call(*f, std::move(arg), t.position);
                }
                if (lookup_function(t.lexeme) != nullptr) {
                    fail("'(' after function name '" + t.lexeme + "'");
                }
                throw Error(ErrorCode::ParseError,
                            "unknown identifier '" + t.lexeme + "'; the only variable is 'u'", t.position);
            }
            case TokenKind::LParen: {
                ++pos_;
                Expr inner = expr();
                expect(TokenKind::RParen, "')'");
                return inner;
            }
            default:
                fail("number, 'u', function call or '('");
        }
    }
};

double value_of(double x) { return x; }
double value_of(const Dual2& x) { return x.value; }
bool finite(double x) { return std::isfinite(x); }
bool finite(const Dual2& x) { return isfinite(x); }

template <class S>
S int_power(S base, std::int64_t n) {
    S result{1.0};
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

[[noreturn]] void domain_error(const std::string& what, std::size_t position) {
    throw Error(ErrorCode::DomainError, what + " at offset " + std::to_string(position), position);
}

template <class S>
S evaluate(const Expr& expr, const S& u) {
    using std::abs, std::cos, std::cosh, std::exp, std::log, std::sin, std::sinh, std::sqrt, std::tan,
        std::tanh;
    const ExprNode& node = expr.node();
    const std::size_t pos = node.position;

    S result = std::visit(
        [&](const auto& n) -> S {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                return S{n.value};
            } else if constexpr (std::is_same_v<T, VariableNode>) {
                return u;
            } else if constexpr (std::is_same_v<T, UnaryNode>) {
                return -evaluate(n.operand, u);
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                const S a = evaluate(n.lhs, u);
                switch (n.op) {
                    case BinaryOp::Add: return a + evaluate(n.rhs, u);
                    case BinaryOp::Subtract: return a - evaluate(n.rhs, u);
                    case BinaryOp::Multiply: return a * evaluate(n.rhs, u);
                    case BinaryOp::Divide: {
                        const S b = evaluate(n.rhs, u);
                        if (value_of(b) == 0.0) domain_error("division by zero", pos);
                        return a / b;
                    }
                    case BinaryOp::Power: {
                        if (n.rhs.is_constant()) {
                            const double k = eval(n.rhs, 0.0);
                            if (k == std::trunc(k) && std::abs(k) <= 1e9) {
                                const auto count = static_cast<std::int64_t>(std::abs(k));
                                if (k < 0.0) {
                                    if (value_of(a) == 0.0) domain_error("division by zero", pos);
                                    return S{1.0} / int_power(a, count);
                                }
                                return int_power(a, count);
                            }
                        }
                        if (!(value_of(a) > 0.0)) {
                            domain_error("non-integer power of a non-positive base", pos);
                        }
                        return exp(evaluate(n.rhs, u) * log(a));
                    }
                }
                return S{};
            } else {
                const S x = evaluate(n.argument, u);
                switch (n.function) {
                    case Function::Sin: return sin(x);
                    case Function::Cos: return cos(x);
                    case Function::Tan: return tan(x);
                    case Function::Sinh: return sinh(x);
                    case Function::Cosh: return cosh(x);
                    case Function::Tanh: return tanh(x);
                    case Function::Exp: return exp(x);
                    case Function::Log:
                        if (!(value_of(x) > 0.0)) domain_error("log of a non-positive value", pos);
                        return log(x);
                    case Function::Sqrt:
                        if (value_of(x) < 0.0) domain_error("sqrt of a negative value", pos);
                        return sqrt(x);
                    case Function::Abs: return abs(x);
                }
                return S{};
            }
        },
        node.data);

    if (!finite(result)) {
        domain_error("non-finite result", pos);
    }
    return result;
}

int precedence(const ExprNode& node) {
    if (const auto* b = std::get_if<BinaryNode>(&node.data)) {
        switch (b->op) {
            case BinaryOp::Add:
            case BinaryOp::Subtract: return 1;
            case BinaryOp::Multiply:
            case BinaryOp::Divide: return 2;
            case BinaryOp::Power: return 4;
        }
    }
    if (std::holds_alternative<UnaryNode>(node.data)) return 3;
    if (const auto* c = std::get_if<ConstantNode>(&node.data); c != nullptr && std::signbit(c->value)) {
        return 3;
    }
    return 5;
}

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::abs(value));
    std::string digits(buf, ptr);
    return std::signbit(value) ? "-" + digits : digits;
}

void print(const Expr& expr, std::string& out);

void print_operand(const Expr& e, int min_precedence, std::string& out) {
    if (precedence(e.node()) < min_precedence) {
        out += '(';
        print(e, out);
        out += ')';
    } else {
        print(e, out);
    }
}

void print(const Expr& expr, std::string& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                out += format_number(n.value);
            } else if constexpr (std::is_same_v<T, VariableNode>) {
                out += 'u';
            } else if constexpr (std::is_same_v<T, UnaryNode>) {
                out += '-';
                print_operand(n.operand, 3, out);
            } else if constexpr (std::is_same_v<T, BinaryNode>) {
                switch (n.op) {
                    case BinaryOp::Add:
                        print_operand(n.lhs, 1, out);
                        out += " + ";
                        print_operand(n.rhs, 2, out);
                        break;
                    case BinaryOp::Subtract:
                        print_operand(n.lhs, 1, out);
                        out += " - ";
                        print_operand(n.rhs, 2, out);
                        break;
                    case BinaryOp::Multiply:
                        print_operand(n.lhs, 2, out);
                        out += "*";
                        print_operand(n.rhs, 3, out);
                        break;
                    case BinaryOp::Divide:
                        print_operand(n.lhs, 2, out);
                        out += "/";
                        print_operand(n.rhs, 3, out);
                        break;
                    case BinaryOp::Power:
                        print_operand(n.lhs, 5, out);
                        out += "^";
                        print_operand(n.rhs, 3, out);
                        break;
                }
            } else {
                out += to_string(n.function);
                out += '(';
                print(n.argument, out);
                out += ')';
            }
        },
        expr.node().data);
}

std::vector<std::vector<Token>> split_top_level_commas(const std::vector<Token>& tokens) {
    std::vector<std::vector<Token>> parts(1);
    int depth = 0;
    for (const Token& t : tokens) {
        if (t.kind == TokenKind::LParen) ++depth;
        if (t.kind == TokenKind::RParen) --depth;
        if (t.kind == TokenKind::Comma && depth == 0) {
            parts.emplace_back();
            continue;
        }
        parts.back().push_back(t);
    }
    return parts;
}

}  // namespace

std::string_view to_string(Function f) noexcept {
    for (const auto& entry : kFunctions) {
        if (entry.function == f) return entry.name;
    }
    return "?";
}

Expr Expr::constant(double value, std::size_t position) {
    return Expr(std::make_shared<const ExprNode>(ExprNode{ConstantNode{value}, position}));
}
Expr Expr::variable(std::size_t position) {
    return Expr(std::make_shared<const ExprNode>(ExprNode{VariableNode{}, position}));
}
Expr Expr::unary(UnaryOp op, Expr operand, std::size_t position) {
    return Expr(std::make_shared<const ExprNode>(ExprNode{UnaryNode{op, std::move(operand)}, position}));
}
Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs, std::size_t position) {
    return Expr(std::make_shared<const ExprNode>(
        ExprNode{BinaryNode{op, std::move(lhs), std::move(rhs)}, position}));
}
Expr Expr::call(Function f, Expr argument, std::size_t position) {
    return Expr(std::make_shared<const ExprNode>(ExprNode{CallNode{f, std::move(argument)}, position}));
}

bool Expr::is_constant() const {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstantNode>) return true;
            else if constexpr (std::is_same_v<T, VariableNode>) return false;
            else if constexpr (std::is_same_v<T, UnaryNode>) return n.operand.is_constant();
            else if constexpr (std::is_same_v<T, BinaryNode>) return n.lhs.is_constant() && n.rhs.is_constant();
            else return n.argument.is_constant();
        },
        node_->data);
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = source.size();
    while (i < n) {
        const char c = source[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(source[i + 1]))) {
            while (i < n && is_digit(source[i])) ++i;
            if (i < n && source[i] == '.') {
                ++i;
                while (i < n && is_digit(source[i])) ++i;
            }
            if (i < n && (source[i] == 'e' || source[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < n && (source[j] == '+' || source[j] == '-')) ++j;
                if (j < n && is_digit(source[j])) {
                    i = j;
                    while (i < n && is_digit(source[i])) ++i;
                }
            }
            tokens.push_back({TokenKind::Number, std::string(source.substr(start, i - start)), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < n && is_ident_char(source[i])) ++i;
            tokens.push_back({TokenKind::Ident, std::string(source.substr(start, i - start)), start});
            continue;
        }
        TokenKind kind{};
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '/': kind = TokenKind::Slash; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ',': kind = TokenKind::Comma; break;
            default: {
                const auto byte = static_cast<unsigned char>(c);
                std::string shown = (byte >= 0x20 && byte < 0x7f) ? std::string(1, c)
                                                                    : "\\x" + std::to_string(byte);
                throw Error(ErrorCode::LexError,
                            "unrecognized character '" + shown + "' at offset " + std::to_string(i), i);
            }
        }
        tokens.push_back({kind, std::string(1, c), start});
        ++i;
    }
    return tokens;
}

Expr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_all(); }

Expr parse_expression(std::string_view source) { return parse(tokenize(source)); }

double eval(const Expr& expr, double u) { return evaluate<double>(expr, u); }

Dual2 eval_dual2(const Expr& expr, double u) { return evaluate<Dual2>(expr, Dual2::variable(u)); }

std::string to_string(const Expr& expr) {
    std::string out;
    print(expr, out);
    return out;
}

CurveSpec parse_curve(std::string_view source) {
    const auto parts = split_top_level_commas(tokenize(source));
    if (parts.size() != 3) {
        throw Error(ErrorCode::ParseError,
                    "a curve needs exactly three comma-separated components, got " + std::to_string(parts.size()));
    }
    CurveSpec spec;
    for (std::size_t k = 0; k < 3; ++k) {
        spec.components[k] = parse(parts[k]);
    }
    spec.source = std::string(source);
    return spec;
}

CurveSpec parse_curve(const std::array<std::string, 3>& components) {
    CurveSpec spec;
    for (std::size_t k = 0; k < 3; ++k) {
        spec.components[k] = parse_expression(components[k]);
    }
    spec.source = components[0] + ", " + components[1] + ", " + components[2];
    return spec;
}

}  // namespace lamarle
