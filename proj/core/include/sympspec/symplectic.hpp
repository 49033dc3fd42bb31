#pragma once

#include <cstdint>
#include <vector>

#include "sympspec/dense_matrix.hpp"

namespace sympspec {

// Block convention throughout: the basis of H(+)H is ordered as all
// first-component vectors, then all second-component vectors, so
// J = [[0, I], [-I, 0]].

/// The symplectic form J of order 2n.
DenseMatrix symplectic_form(std::size_t n);

/// J*m for the block form above; avoids materializing J.
DenseMatrix apply_j_left(const DenseMatrix& m);

/// true iff ||m^T J m - J||_F <= tol. m must be square of even order.
bool is_symplectic(const DenseMatrix& m, double tol);

/// Symplectic eigenvalues of an SPD matrix of order 2n, ascending, length n.
/// Computed as the square roots of the paired eigenvalues of K^T K with
/// K = sqrt(t) J sqrt(t); the pairs must match within 1e-7 relative.
std::vector<double> symplectic_eigenvalues(const DenseMatrix& t);

/// Williamson normal form t = M^T diag(d, d) M with M symplectic.
struct WilliamsonResult {
    std::vector<double> d;  // symplectic eigenvalues, ascending
    DenseMatrix m;          // the symplectic transformation M
    double residual;        // ||M^T diag(d,d) M - t||_F / ||t||_F
};
WilliamsonResult williamson(const DenseMatrix& t);

/// l^T t l, re-symmetrized. l must pass is_symplectic at 1e-8.
DenseMatrix symplectic_conjugate(const DenseMatrix& t, const DenseMatrix& l);

/// Deterministic random symplectic matrix of order 2n: a product of elementary
/// factors [[I,0],[C,I]] [[I,D],[0,I]] [[G,0],[0,(G^T)^-1]] with C, D random
/// symmetric of entry scale `magnitude` and G a mild perturbation of I.
DenseMatrix random_symplectic(std::size_t n, std::uint64_t seed, double magnitude);

} // namespace sympspec
