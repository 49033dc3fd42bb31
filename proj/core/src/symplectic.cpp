#include "sympspec/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sympspec/eigen.hpp"
#include "sympspec/errors.hpp"

namespace sympspec {

DenseMatrix symplectic_form(std::size_t n) {
    DenseMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1.0;
        j(n + i, i) = -1.0;
    }
    return j;
}

DenseMatrix apply_j_left(const DenseMatrix& m) {
    if (m.rows() % 2 != 0) throw DimensionError("apply_j_left: even order required");
    const std::size_t n = m.rows() / 2;
    DenseMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(i, j) = m(n + i, j);
            r(n + i, j) = -m(i, j);
        }
    return r;
}

bool is_symplectic(const DenseMatrix& m, double tol) {
    if (!m.square() || m.rows() % 2 != 0)
        throw DimensionError("is_symplectic: square matrix of even order required");
    // m^T J m - J
    DenseMatrix jm = apply_j_left(m);
    DenseMatrix mtjm = mat_mul(transpose(m), jm);
    const std::size_t n = m.rows() / 2;
    double sum = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) {
            double expected = 0.0;
            if (j == i + n) expected = 1.0;
            if (i == j + n) expected = -1.0;
            const double d = mtjm(i, j) - expected;
            sum += d * d;
        }
    return std::sqrt(sum) <= tol;
}

namespace {

void require_even_spd_shape(const DenseMatrix& t, const char* who) {
    if (!t.square() || t.rows() % 2 != 0)
        throw DimensionError(std::string(who) + ": square matrix of even order required");
}

// Eigenvalues of G = K^T K come in pairs {d^2, d^2}; collapse them into n
// symplectic eigenvalues, checking the pairing within 1e-7 relative.
std::vector<double> collapse_pairs(const std::vector<double>& g_eigs, const char* who) {
    const std::size_t n = g_eigs.size() / 2;
    std::vector<double> d(n);
    const double scale = std::max(std::fabs(g_eigs.front()), std::fabs(g_eigs.back()));
    for (std::size_t k = 0; k < n; ++k) {
        const double lo = g_eigs[2 * k], hi = g_eigs[2 * k + 1];
        if (std::fabs(hi - lo) > 1e-7 * std::max(scale, std::fabs(hi)))
            throw NumericError(std::string(who) +
                               ": eigenvalue pairing failure (non-SPD drift or breakdown)");
        const double mean = 0.5 * (lo + hi);
        if (mean <= 0.0)
            throw NumericError(std::string(who) + ": nonpositive paired eigenvalue");
        d[k] = std::sqrt(mean);
    }
    return d;
}

} // namespace

std::vector<double> symplectic_eigenvalues(const DenseMatrix& t) {
    require_even_spd_shape(t, "symplectic_eigenvalues");
    const DenseMatrix root = sqrt_psd(t);
    // K = sqrt(t) J sqrt(t), skew-symmetric; G = K^T K = -K^2 is symmetric PSD
    const DenseMatrix k = mat_mul(root, apply_j_left(root));
    const DenseMatrix g = mat_mul(transpose(k), k);
    SymEigResult eig = sym_eig(g);
    return collapse_pairs(eig.eigenvalues, "symplectic_eigenvalues");
}

WilliamsonResult williamson(const DenseMatrix& t) {
    require_even_spd_shape(t, "williamson");
    const std::size_t n2 = t.rows();
    const std::size_t n = n2 / 2;

    const SpdRoots roots = spd_roots(t);
    // Kt = t^{-1/2} J t^{-1/2}, skew with singular values 1/d, each twice.
    // The one-sided SVD keeps clustered 1/d separated with relative accuracy;
    // eigenvectors of Kt^T Kt would mix nearby pairs and break symplecticity.
    const DenseMatrix kt = mat_mul(roots.inv_sqrt, apply_j_left(roots.inv_sqrt));
    const SvdResult svd = svd_jacobi(kt);

    {
        std::vector<double> paired = svd.singular_values;
        std::sort(paired.begin(), paired.end());
        collapse_pairs(paired, "williamson"); // validates the pairing
    }

    // Pair each right singular vector u with v = -d * Kt u, re-orthonormalizing
    // inside degenerate clusters. Columns [U | V] form the orthogonal O with
    // O^T Kt O = [[0, diag(1/d)], [-diag(1/d), 0]].
    std::vector<std::vector<double>> us, vs;
    us.reserve(n);
    vs.reserve(n); // stable addresses for the `selected` pointers below
    std::vector<double> pair_d;
    std::vector<const std::vector<double>*> selected;

    auto dot = [n2](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < n2; ++i) s += x[i] * y[i];
        return s;
    };
    auto norm = [&](const std::vector<double>& x) { return std::sqrt(dot(x, x)); };

    for (std::size_t col = 0; col < n2 && us.size() < n; ++col) {
        std::vector<double> u(n2);
        for (std::size_t i = 0; i < n2; ++i) u[i] = svd.v(i, col);
        for (const auto* x : selected) {
            const double c = dot(u, *x);
            for (std::size_t i = 0; i < n2; ++i) u[i] -= c * (*x)[i];
        }
        const double un = norm(u);
        if (un < 0.5) continue; // already covered by a selected pair
        for (double& x : u) x /= un;

        // ||Kt u|| recovers 1/d for this vector's pair plane.
        std::vector<double> ku(n2, 0.0);
        for (std::size_t j = 0; j < n2; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n2; ++i) s += kt(j, i) * u[i];
            ku[j] = s;
        }
        const double kn = norm(ku);
        if (kn <= 0.0) throw NumericError("williamson: vanishing singular value");
        const double dk = 1.0 / kn;

        std::vector<double> v(n2);
        for (std::size_t j = 0; j < n2; ++j) v[j] = -dk * ku[j];
        for (const auto* x : selected) {
            const double c = dot(v, *x);
            for (std::size_t i = 0; i < n2; ++i) v[i] -= c * (*x)[i];
        }
        const double cu = dot(v, u);
        for (std::size_t i = 0; i < n2; ++i) v[i] -= cu * u[i];
        const double vn = norm(v);
        if (vn < 0.5)
            throw NumericError("williamson: degeneracy resolution failure");
        for (double& x : v) x /= vn;

        us.push_back(std::move(u));
        vs.push_back(std::move(v));
        pair_d.push_back(dk);
        selected.push_back(&us.back());
        selected.push_back(&vs.back());
    }
    if (us.size() != n) throw NumericError("williamson: degeneracy resolution failure");

    // Sort pairs so d is ascending in the normal form.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return pair_d[i] < pair_d[j]; });

    DenseMatrix o(n2, n2);
    std::vector<double> d_sorted(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        d_sorted[k] = pair_d[src];
        for (std::size_t i = 0; i < n2; ++i) {
            o(i, k) = us[src][i];
            o(i, n + k) = vs[src][i];
        }
    }

    // M = diag(d,d)^{-1/2} O^T t^{1/2}; then t = M^T diag(d,d) M and M^T J M = J.
    DenseMatrix m = mat_mul(transpose(o), roots.sqrt);
    for (std::size_t k = 0; k < n; ++k) {
        const double f = 1.0 / std::sqrt(d_sorted[k]);
        for (std::size_t j = 0; j < n2; ++j) {
            m(k, j) *= f;
            m(n + k, j) *= f;
        }
    }

    // residual ||M^T diag(d,d) M - t||_F / ||t||_F
    DenseMatrix dm(n2, n2);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n2; ++j) {
            dm(k, j) = d_sorted[k] * m(k, j);
            dm(n + k, j) = d_sorted[k] * m(n + k, j);
        }
    const DenseMatrix recon = mat_mul(transpose(m), dm);
    const double residual = frobenius(recon - t) / frobenius(t);

    return WilliamsonResult{std::move(d_sorted), std::move(m), residual};
}

DenseMatrix symplectic_conjugate(const DenseMatrix& t, const DenseMatrix& l) {
    if (!is_symplectic(l, 1e-8))
        throw PreconditionError("symplectic_conjugate: l is not symplectic at 1e-8");
    if (t.rows() != l.rows())
        throw DimensionError("symplectic_conjugate: shape mismatch");
    return symmetrize(mat_mul(transpose(l), mat_mul(t, l)));
}

DenseMatrix random_symplectic(std::size_t n, std::uint64_t seed, double magnitude) {
    if (!(magnitude > 0.0) || magnitude > 1.0)
        throw PreconditionError("random_symplectic: magnitude must be in (0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    const std::size_t n2 = 2 * n;
    auto random_symmetric = [&]() {
        DenseMatrix s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const double v = magnitude * unit(rng);
                s(i, j) = v;
                s(j, i) = v;
            }
        return s;
    };

    const DenseMatrix c = random_symmetric();
    const DenseMatrix d = random_symmetric();
    // G = I + perturbation, kept well conditioned by the entry scale
    DenseMatrix gpert(n, n);
    const double gscale = std::min(magnitude, 0.5) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gpert(i, j) = (i == j ? 1.0 : 0.0) + gscale * unit(rng);

    // (G^T)^{-1} via the SPD inverse of G^T G: (G^T)^{-1} = G (G^T G)^{-1}
    const DenseMatrix gtg = symmetrize(mat_mul(transpose(gpert), gpert));
    const DenseMatrix gt_inv = mat_mul(gpert, inv_spd(gtg));

    DenseMatrix result(n2, n2);
    // [[I,0],[C,I]] * [[I,D],[0,I]] = [[I, D],[C, C*D + I]]
    const DenseMatrix cd = mat_mul(c, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            result(i, j) = (i == j ? 1.0 : 0.0);
            result(i, n + j) = d(i, j);
            result(n + i, j) = c(i, j);
            result(n + i, n + j) = cd(i, j) + (i == j ? 1.0 : 0.0);
        }
    // multiply by [[G,0],[0,(G^T)^{-1}]] on the right
    DenseMatrix factor(n2, n2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            factor(i, j) = gpert(i, j);
            factor(n + i, n + j) = gt_inv(i, j);
        }
    return mat_mul(result, factor);
}

} // namespace sympspec
