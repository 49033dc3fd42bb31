#include "sympspec/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "sympspec/errors.hpp"

namespace sympspec::expr {

namespace {

constexpr int kMaxDepth = 64;
constexpr int kMaxExponent = 12;

std::shared_ptr<Node> make(NodeKind kind) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    return node;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Ast run() {
        if (src_.empty()) throw ParseError("empty expression", 0);
        Ast root = parse_expr(0);
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return root;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    void check_depth(int depth) {
        if (depth > kMaxDepth) throw ParseError("expression nesting too deep", pos_);
    }

    Ast parse_expr(int depth) {
        check_depth(depth);
        Ast left = parse_term(depth + 1);
        for (;;) {
            if (consume('+')) {
                auto node = make(NodeKind::Add);
                node->lhs = left;
                node->rhs = parse_term(depth + 1);
                left = node;
            } else if (consume('-')) {
                auto node = make(NodeKind::Sub);
                node->lhs = left;
                node->rhs = parse_term(depth + 1);
                left = node;
            } else {
                return left;
            }
        }
    }

    Ast parse_term(int depth) {
        check_depth(depth);
        Ast left = parse_unary(depth + 1);
        for (;;) {
            if (consume('*')) {
                auto node = make(NodeKind::Mul);
                node->lhs = left;
                node->rhs = parse_unary(depth + 1);
                left = node;
            } else if (consume('/')) {
                auto node = make(NodeKind::Div);
                node->lhs = left;
                node->rhs = parse_unary(depth + 1);
                left = node;
            } else {
                return left;
            }
        }
    }

    Ast parse_unary(int depth) {
        check_depth(depth);
        if (consume('-')) {
            auto node = make(NodeKind::Neg);
            node->lhs = parse_unary(depth + 1);
            return node;
        }
        return parse_power(depth + 1);
    }

    Ast parse_power(int depth) {
        check_depth(depth);
        Ast base = parse_atom(depth + 1);
        if (!consume('^')) return base;
        skip_ws();
        const std::size_t exp_pos = pos_;
        bool negative = false;
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
            negative = src_[pos_] == '-';
            ++pos_;
        }
        const std::size_t digits_start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == digits_start) throw ParseError("expected integer exponent", exp_pos);
        int value = 0;
        std::from_chars(src_.data() + digits_start, src_.data() + pos_, value);
        if (pos_ - digits_start > 3 || value > kMaxExponent)
            throw ParseError("exponent out of range [-12, 12]", exp_pos);
        auto node = make(NodeKind::Pow);
        node->lhs = base;
        node->exponent = negative ? -value : value;
        return node;
    }

    Ast parse_atom(int depth) {
        check_depth(depth);
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Ast inner = parse_expr(depth + 1);
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double value = 0.0;
            auto [ptr, ec] =
                std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
            if (ec != std::errc{}) throw ParseError("invalid number", pos_);
            pos_ = static_cast<std::size_t>(ptr - src_.data());
            auto node = make(NodeKind::Number);
            node->number = value;
            return node;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (src_.substr(start, pos_ - start) == "n") return make(NodeKind::Var);
            throw ParseError("unknown identifier '" +
                                 std::string(src_.substr(start, pos_ - start)) + "'",
                             start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

double checked(double x) {
    if (!std::isfinite(x)) throw NumericError("expression evaluation overflowed to non-finite");
    return x;
}

int precedence(NodeKind kind) {
    switch (kind) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Neg: return 2;
        case NodeKind::Mul:
        case NodeKind::Div: return 3;
        case NodeKind::Pow: return 4;
        default: return 5;
    }
}

void print(const Node& node, std::string& out) {
    auto child = [&](const Node& c, bool needs_parens) {
        if (needs_parens) out += '(';
        print(c, out);
        if (needs_parens) out += ')';
    };
    switch (node.kind) {
        case NodeKind::Number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", node.number);
            out += buf;
            break;
        }
        case NodeKind::Var: out += 'n'; break;
        case NodeKind::Neg: {
            // binary children need parens so "-(a*b)" does not re-read as (-a)*b
            const NodeKind ck = node.lhs->kind;
            const bool binary = ck == NodeKind::Add || ck == NodeKind::Sub ||
                                ck == NodeKind::Mul || ck == NodeKind::Div;
            out += '-';
            child(*node.lhs, binary);
            break;
        }
        case NodeKind::Add:
        case NodeKind::Sub: {
            child(*node.lhs, precedence(node.lhs->kind) < 1);
            out += node.kind == NodeKind::Add ? " + " : " - ";
            child(*node.rhs, precedence(node.rhs->kind) <= 1);
            break;
        }
        case NodeKind::Mul:
        case NodeKind::Div: {
            child(*node.lhs, precedence(node.lhs->kind) < 3);
            out += node.kind == NodeKind::Mul ? "*" : "/";
            child(*node.rhs, precedence(node.rhs->kind) <= 3);
            break;
        }
        case NodeKind::Pow: {
            child(*node.lhs, precedence(node.lhs->kind) <= 4);
            out += '^';
            out += std::to_string(node.exponent);
            break;
        }
    }
}

} // namespace

Ast parse(std::string_view src) { return Parser(src).run(); }

double eval(const Node& node, long n) {
    switch (node.kind) {
        case NodeKind::Number: return node.number;
        case NodeKind::Var: return static_cast<double>(n);
        case NodeKind::Neg: return checked(-eval(*node.lhs, n));
        case NodeKind::Add: return checked(eval(*node.lhs, n) + eval(*node.rhs, n));
        case NodeKind::Sub: return checked(eval(*node.lhs, n) - eval(*node.rhs, n));
        case NodeKind::Mul: return checked(eval(*node.lhs, n) * eval(*node.rhs, n));
        case NodeKind::Div: {
            const double denom = eval(*node.rhs, n);
            if (denom == 0.0)
                throw NumericError("division by zero at n = " + std::to_string(n));
            return checked(eval(*node.lhs, n) / denom);
        }
        case NodeKind::Pow: {
            const double base = eval(*node.lhs, n);
            if (node.exponent < 0 && base == 0.0)
                throw NumericError("division by zero at n = " + std::to_string(n));
            return checked(std::pow(base, node.exponent));
        }
    }
    throw NumericError("corrupt expression node");
}

std::string to_string(const Node& node) {
    std::string out;
    print(node, out);
    return out;
}

bool structurally_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case NodeKind::Number: return a.number == b.number;
        case NodeKind::Var: return true;
        case NodeKind::Neg: return structurally_equal(*a.lhs, *b.lhs);
        case NodeKind::Pow:
            return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
        default:
            return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

} // namespace sympspec::expr
