#include "sympspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "sympspec/errors.hpp"

namespace sympspec {

namespace {

// One Jacobi rotation in the (p,q) plane applied as G^T A G on the dense
// symmetric matrix `a` (row-major, order n), with the transposed eigenvector
// accumulator `vt` (rows are eigenvectors-in-progress).
inline void rotate(double* a, double* vt, std::size_t n, std::size_t p, std::size_t q,
                   double c, double s) {
    double* ap = a + p * n;
    double* aq = a + q * n;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = ap[k], y = aq[k];
        ap[k] = c * x - s * y;
        aq[k] = s * x + c * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
        double* row = a + k * n;
        const double x = row[p], y = row[q];
        row[p] = c * x - s * y;
        row[q] = s * x + c * y;
    }
    double* vp = vt + p * n;
    double* vq = vt + q * n;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = vp[k], y = vq[k];
        vp[k] = c * x - s * y;
        vq[k] = s * x + c * y;
    }
}

} // namespace

SymEigResult sym_eig(const DenseMatrix& s, const JacobiOptions& opts) {
    if (!s.square()) throw DimensionError("sym_eig: matrix must be square");
    const std::size_t n = s.rows();
    const double scale = max_abs(s);
    if (scale > 0 && asymmetry(s) > opts.symmetry_tol * scale)
        throw PreconditionError("sym_eig: matrix is asymmetric beyond tolerance");

    const DenseMatrix sym = symmetrize(s);
    std::vector<double> a(sym.entries());
    std::vector<double> vt(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

    const double fnorm = frobenius(sym);
    const double stop = opts.off_diag_tol * fnorm;

    bool converged = (n == 1);
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        double off_max = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                const double mag = std::fabs(apq);
                off_max = std::max(off_max, mag);
                if (mag <= stop) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                rotate(a.data(), vt.data(), n, p, q, c, t * c);
            }
        }
        if (off_max <= stop) converged = true;
    }
    if (!converged) {
        // final check: the last sweep may have finished the job
        double off_max = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off_max = std::max(off_max, std::fabs(a[p * n + q]));
        if (off_max > stop)
            throw NumericError("sym_eig: Jacobi iteration did not converge within sweep limit");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

    SymEigResult result;
    result.eigenvalues.resize(n);
    result.vectors = DenseMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        result.eigenvalues[col] = a[src * n + src];
        for (std::size_t i = 0; i < n; ++i) result.vectors(i, col) = vt[src * n + i];
    }
    return result;
}

SvdResult svd_jacobi(const DenseMatrix& input, const JacobiOptions& opts) {
    if (!input.square()) throw DimensionError("svd_jacobi: matrix must be square");
    const std::size_t n = input.rows();

    // Hestenes one-sided Jacobi. Work on rows of b = input^T (the columns of
    // the input) so each rotation touches contiguous memory; vt rows become
    // the right singular vectors.
    std::vector<double> b(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[j * n + i] = input(i, j);
    std::vector<double> vt(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

    bool converged = (n == 1);
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            double* bp = b.data() + p * n;
            for (std::size_t q = p + 1; q < n; ++q) {
                double* bq = b.data() + q * n;
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    alpha += bp[k] * bp[k];
                    beta += bq[k] * bq[k];
                    gamma += bp[k] * bq[k];
                }
                if (std::fabs(gamma) <= opts.off_diag_tol * std::sqrt(alpha * beta)) continue;
                converged = false;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double x = bp[k], y = bq[k];
                    bp[k] = c * x - s * y;
                    bq[k] = s * x + c * y;
                }
                double* vp = vt.data() + p * n;
                double* vq = vt.data() + q * n;
                for (std::size_t k = 0; k < n; ++k) {
                    const double x = vp[k], y = vq[k];
                    vp[k] = c * x - s * y;
                    vq[k] = s * x + c * y;
                }
            }
        }
    }
    if (!converged)
        throw NumericError("svd_jacobi: Jacobi iteration did not converge within sweep limit");

    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += b[i * n + k] * b[i * n + k];
        sigma[i] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdResult result;
    result.singular_values.resize(n);
    result.v = DenseMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        result.singular_values[col] = sigma[src];
        for (std::size_t i = 0; i < n; ++i) result.v(i, col) = vt[src * n + i];
    }
    return result;
}

namespace {

DenseMatrix rebuild(const SymEigResult& eig, const std::vector<double>& lambda) {
    const std::size_t n = eig.eigenvalues.size();
    DenseMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) = eig.vectors(i, j) * lambda[j];
    return symmetrize(mat_mul(scaled, transpose(eig.vectors)));
}

double spectral_scale(const SymEigResult& eig) {
    double s = 0.0;
    for (double l : eig.eigenvalues) s = std::max(s, std::fabs(l));
    return s;
}

} // namespace

DenseMatrix sqrt_psd(const DenseMatrix& s, const JacobiOptions& opts) {
    SymEigResult eig = sym_eig(s, opts);
    const double scale = spectral_scale(eig);
    std::vector<double> roots(eig.eigenvalues.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        double l = eig.eigenvalues[i];
        if (l < -1e-10 * scale)
            throw PreconditionError("sqrt_psd: matrix is not positive semidefinite");
        roots[i] = std::sqrt(std::max(l, 0.0));
    }
    return rebuild(eig, roots);
}

DenseMatrix inv_spd(const DenseMatrix& s, const JacobiOptions& opts) {
    SymEigResult eig = sym_eig(s, opts);
    const double scale = spectral_scale(eig);
    std::vector<double> inv(eig.eigenvalues.size());
    for (std::size_t i = 0; i < inv.size(); ++i) {
        double l = eig.eigenvalues[i];
        if (l <= 1e-12 * scale)
            throw PreconditionError("inv_spd: matrix is not positive definite");
        inv[i] = 1.0 / l;
    }
    return rebuild(eig, inv);
}

SpdRoots spd_roots(const DenseMatrix& s, const JacobiOptions& opts) {
    SymEigResult eig = sym_eig(s, opts);
    const std::size_t n = eig.eigenvalues.size();
    const double scale = spectral_scale(eig);
    std::vector<double> rt(n), irt(n);
    for (std::size_t i = 0; i < n; ++i) {
        double l = eig.eigenvalues[i];
        if (l <= 1e-12 * scale)
            throw PreconditionError("spd_roots: matrix is not positive definite");
        rt[i] = std::sqrt(l);
        irt[i] = 1.0 / rt[i];
    }
    SpdRoots roots{rebuild(eig, rt), rebuild(eig, irt), eig.eigenvalues.front(),
                   eig.eigenvalues.back()};
    return roots;
}

} // namespace sympspec
