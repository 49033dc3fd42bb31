#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace sympspec::expr {

// Scalar formulas in one integer variable n. Grammar:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' signed-integer)?
//   atom  := number | 'n' | '(' expr ')'
// Left-associative; unary minus binds looser than '^'; whitespace insensitive.

enum class NodeKind { Number, Var, Neg, Add, Sub, Mul, Div, Pow };

struct Node;
using Ast = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    double number = 0.0;  // Number
    int exponent = 0;     // Pow, literal in [-12, 12]
    Ast lhs, rhs;         // Neg uses lhs only
};

/// Throws ParseError (with byte offset) on syntax errors, out-of-range
/// exponents, unknown identifiers, or tree depth > 64.
Ast parse(std::string_view src);

/// Throws NumericError on division by zero or non-finite results.
double eval(const Node& ast, long n);
inline double eval(const Ast& ast, long n) { return eval(*ast, n); }

std::string to_string(const Node& ast);
inline std::string to_string(const Ast& ast) { return to_string(*ast); }

bool structurally_equal(const Node& a, const Node& b);

} // namespace sympspec::expr
