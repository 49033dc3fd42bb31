#pragma once

#include <vector>

#include "sympspec/dense_matrix.hpp"

namespace sympspec {

/// Eigendecomposition of a symmetric matrix: s = vectors * diag(eigenvalues) * vectors^T,
/// eigenvalues ascending, columns of `vectors` are the eigenvectors.
struct SymEigResult {
    std::vector<double> eigenvalues;
    DenseMatrix vectors;
};

struct JacobiOptions {
    int max_sweeps = 100;
    double off_diag_tol = 1e-14; // relative to ||s||_F
    double symmetry_tol = 1e-12; // relative to ||s||_inf
};

/// Cyclic Jacobi eigendecomposition. The input is symmetrized as (s + s^T)/2
/// when within symmetry_tol; asymmetry beyond that is an error.
SymEigResult sym_eig(const DenseMatrix& s, const JacobiOptions& opts = {});

/// Symmetric PSD square root. Eigenvalues in [-1e-10*||s||, 0) are clamped to 0;
/// anything below that signals a non-PSD input.
DenseMatrix sqrt_psd(const DenseMatrix& s, const JacobiOptions& opts = {});

/// Inverse of a symmetric positive definite matrix via eigendecomposition.
DenseMatrix inv_spd(const DenseMatrix& s, const JacobiOptions& opts = {});

/// One-sided Jacobi SVD of a square matrix: a = U diag(s) V^T with s
/// descending and V orthogonal (U is not materialized). Unlike eigenvalues of
/// a^T a, the singular values carry high relative accuracy; the Williamson
/// construction depends on this for clustered spectra.
struct SvdResult {
    std::vector<double> singular_values; // descending
    DenseMatrix v;                       // right singular vectors as columns
};
SvdResult svd_jacobi(const DenseMatrix& a, const JacobiOptions& opts = {});

/// sqrt and inverse sqrt of an SPD matrix from a single eigendecomposition.
struct SpdRoots {
    DenseMatrix sqrt;
    DenseMatrix inv_sqrt;
    double min_eigenvalue;
    double max_eigenvalue;
};
SpdRoots spd_roots(const DenseMatrix& s, const JacobiOptions& opts = {});

} // namespace sympspec
