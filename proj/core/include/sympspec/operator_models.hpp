#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sympspec/dense_matrix.hpp"
#include "sympspec/expr.hpp"

namespace sympspec {

// Declarative models of infinite operators on H and H(+)H. Truncation takes
// the leading principal section with respect to the standard basis.

struct HOperatorSpec;
using HOpPtr = std::shared_ptr<const HOperatorSpec>;

/// k-th diagonal entry = eval(formula, k), k >= 1.
struct DiagonalSpec {
    expr::Ast formula;
    std::string source; // formula text as written
};

/// entry (i,j) = coeffs[|i-j|], zero beyond the last coefficient.
/// Symbol a(t) = a0 + 2*sum_{k>=1} a_k cos(kt).
struct ToeplitzSpec {
    std::vector<double> coeffs;
};

/// Direct sum of 2x2 blocks [[a_k, b_k], [b_k, -a_k]] with b_k = sqrt(1-a_k^2);
/// requires a_k in (0,1).
struct Block2x2DirectSumSpec {
    expr::Ast a_formula;
    std::string source;
};

/// block (+) block (+) ...
struct MatrixDirectSumSpec {
    DenseMatrix block;
};

struct ScaledSpec {
    double factor;
    HOpPtr child;
};
struct SumSpec {
    HOpPtr lhs, rhs;
};
/// Truncated as the product of the truncations, re-symmetrized; exact only
/// when the factors commute with the projections (e.g. diagonal operators).
struct ProductSpec {
    HOpPtr lhs, rhs;
};

struct HOperatorSpec {
    std::variant<DiagonalSpec, ToeplitzSpec, Block2x2DirectSumSpec,
                 MatrixDirectSumSpec, ScaledSpec, SumSpec, ProductSpec>
        node;
};

HOpPtr make_diagonal(const std::string& formula);
HOpPtr make_toeplitz(std::vector<double> coeffs);
HOpPtr make_block2x2(const std::string& a_formula);
HOpPtr make_matrix_direct_sum(DenseMatrix block);
HOpPtr make_scaled(double factor, HOpPtr child);
HOpPtr make_sum(HOpPtr lhs, HOpPtr rhs);
HOpPtr make_product(HOpPtr lhs, HOpPtr rhs);

bool is_diagonal(const HOperatorSpec& spec);
/// k-th diagonal entry of a Diagonal spec (k >= 1).
double diagonal_entry(const HOperatorSpec& spec, long k);

/// Operators on H(+)H.
struct HHOperatorSpec {
    enum class Kind { ClassA, ClassB, Doubled, Explicit };
    Kind kind;
    HOpPtr a, b;             // ClassA: [A 0; 0 B]; ClassB: [A B; B A]; Doubled: [A 0; 0 A]
    DenseMatrix t;           // Explicit
    bool assume_commuting = false; // downgrade commutation failure to a warning
};

HHOperatorSpec make_class_a(HOpPtr a, HOpPtr b, bool assume_commuting = false);
HHOperatorSpec make_class_b(HOpPtr a, HOpPtr b, bool assume_commuting = false);
HHOperatorSpec make_doubled(HOpPtr a);
HHOperatorSpec make_explicit(DenseMatrix t);

struct TruncationSchedule {
    std::vector<std::size_t> ns; // half-dimensions, strictly increasing

    static constexpr std::size_t default_cap = 2000;
    /// Validates strict increase and the cap.
    static TruncationSchedule make(std::vector<std::size_t> ns,
                                   std::size_t cap = default_cap);
};

/// Leading n x n section of an H operator. Exactly symmetric by construction.
DenseMatrix truncate_h(const HOperatorSpec& spec, std::size_t n);
inline DenseMatrix truncate_h(const HOpPtr& spec, std::size_t n) { return truncate_h(*spec, n); }

/// 2n x 2n truncation of an H(+)H operator, block order per the symplectic
/// convention. ClassA checks ||A_n B_n - B_n A_n||_F <= ctol ||A_n|| ||B_n||
/// and SPD of both blocks; ClassB applies the same to (A+B)_n and (A-B)_n.
DenseMatrix truncate_hh(const HHOperatorSpec& spec, std::size_t n, double ctol = 1e-10);

/// min/max of the Toeplitz symbol over a uniform grid of `samples` points on
/// [-pi, pi] (samples >= 64); an estimate of the essential range endpoints for
/// continuous symbols.
std::pair<double, double> symbol_range(const ToeplitzSpec& spec, std::size_t samples);

/// JSON spec files. Schema keys: space ("H"|"HH"), kind, entry_formula,
/// coeffs, a, b, block, assume_commuting. Unknown keys are rejected.
HHOperatorSpec load_hh_spec_json(const std::string& json_text);
HHOperatorSpec load_hh_spec_file(const std::string& path);
HOpPtr load_h_spec_json(const std::string& json_text);

} // namespace sympspec
