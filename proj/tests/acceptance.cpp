// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "sympspec/analysis.hpp"
#include "sympspec/eigen.hpp"
#include "sympspec/operator_models.hpp"
#include "sympspec/symplectic.hpp"
#include "test_support.hpp"

using namespace sympspec;
using testsupport::Rng;

namespace {

int failures = 0;

void report(int id, bool ok, const char* what) {
    std::printf("criterion %2d: %s - %s\n", id, ok ? "PASS" : "FAIL", what);
    if (!ok) ++failures;
}

// Reference symplectic spectra of the doubled tridiagonal operator (diagonal
// 2, off-diagonal 0.5), published to 5 decimals; keyed by total dimension.
const std::vector<double> kDoubledRef10 = {1.13397, 1.5, 2.0, 2.5, 2.86603};
const std::vector<double> kDoubledRef20 = {1.04051, 1.15875, 1.34514, 1.58458, 1.85769,
                                           2.14231, 2.41542, 2.65486, 2.84125, 2.95949};
const std::vector<double> kDoubledRef50 = {
    1.00729, 1.02906, 1.06498, 1.11454, 1.17702, 1.25149, 1.33688, 1.43194, 1.53528,
    1.6454,  1.76068, 1.87946, 2.0,     2.12054, 2.23932, 2.3546,  2.46472, 2.56806,
    2.66312, 2.74851, 2.82298, 2.88546, 2.93502, 2.97094, 2.99271};

// Published symplectic spectrum of the convergent diagonal two-block operator,
// descending; prefixes of length 5, 10, 25, 50 are the rows for total
// dimensions 10, 20, 50, 100.
const std::vector<double> kDiagRef = {
    1.1858541226, 1.0734353145, 1.0387981337, 1.0238749924, 1.01613779,
    1.0116239984, 1.0087659008, 1.0068437596, 1.0054899303, 1.0045008645,
    1.0037565277, 1.0031824456, 1.0027304382, 1.0023682246, 1.0020735224,
    1.0018305513, 1.0016278834, 1.0014570789, 1.0013117958, 1.0011871944,
    1.0010795294, 1.0009858661, 1.0009038788, 1.0008317053, 1.0007678401,
    1.0007110557, 1.0006603431, 1.0006148667, 1.00057393,   1.0005369483,
    1.0005034282, 1.000472951,  1.0004451592, 1.0004197465, 1.0003964489,
    1.0003750381, 1.0003553157, 1.0003371088, 1.0003202661, 1.0003046546,
    1.0002901572, 1.0002766703, 1.0002641023, 1.0002523714, 1.000241405,
    1.0002311381, 1.0002215124, 1.0002124757, 1.0002039808, 1.0001959853};

HHOperatorSpec doubled_tridiagonal() { return make_doubled(make_toeplitz({2.0, 0.5})); }

HHOperatorSpec diag_two_block() {
    return make_class_b(make_diagonal("1 + 1/(2*(n+1)^2) + 1/(2*(n+1)^3)"),
                        make_diagonal("1/(2*(n+1)^2) - 1/(2*(n+1)^3)"));
}

bool matches(const std::vector<double>& got_ascending, const std::vector<double>& want_ascending,
             double tol) {
    if (got_ascending.size() != want_ascending.size()) return false;
    for (std::size_t i = 0; i < got_ascending.size(); ++i)
        if (std::fabs(got_ascending[i] - want_ascending[i]) > tol) return false;
    return true;
}

void criterion1() {
    const auto spec = doubled_tridiagonal();
    bool ok = true;
    const std::vector<std::pair<std::size_t, const std::vector<double>*>> rows = {
        {5, &kDoubledRef10}, {10, &kDoubledRef20}, {25, &kDoubledRef50}};
    for (const auto& [half_dim, ref] : rows) {
        const auto d = symplectic_eigenvalues(truncate_hh(spec, half_dim));
        ok = ok && matches(d, *ref, 5e-6);
    }
    report(1, ok, "doubled tridiagonal sweep matches the published spectra to 5 decimals");
}

void criterion2() {
    const auto spec = diag_two_block();
    bool ok = true;
    for (std::size_t half_dim : {5, 10, 25, 50}) {
        auto d = symplectic_eigenvalues(truncate_hh(spec, half_dim));
        std::reverse(d.begin(), d.end()); // published lists are descending
        const std::vector<double> ref(kDiagRef.begin(), kDiagRef.begin() + half_dim);
        ok = ok && matches(d, ref, 1e-9);
        for (std::size_t k = 1; k <= half_dim; ++k) {
            const double kk = static_cast<double>(k + 1);
            const double closed = std::sqrt((1.0 + 1.0 / (kk * kk)) * (1.0 + 1.0 / (kk * kk * kk)));
            ok = ok && std::fabs(d[k - 1] - closed) <= 1e-12;
        }
    }
    report(2, ok, "diagonal two-block spectra match the published values and the closed form");
}

std::vector<DenseMatrix> williamson_corpus() {
    Rng rng(20260823);
    std::vector<DenseMatrix> corpus;
    for (int i = 0; i < 200; ++i) {
        const std::size_t half = 1 + static_cast<std::size_t>(i % 50); // orders 2..100
        corpus.push_back(testsupport::random_spd(2 * half, rng, 1e6));
    }
    return corpus;
}

void criterion3(const std::vector<DenseMatrix>& corpus) {
    bool ok = true;
    for (const DenseMatrix& t : corpus) {
        const WilliamsonResult w = williamson(t);
        const std::size_t half = t.rows() / 2;
        DenseMatrix diag(t.rows(), t.rows());
        for (std::size_t i = 0; i < half; ++i) diag(i, i) = diag(half + i, half + i) = w.d[i];
        const DenseMatrix j = symplectic_form(half);
        const DenseMatrix sj = mat_mul(transpose(w.m), mat_mul(j, w.m));
        ok = ok && w.residual <= 1e-8 && frobenius(sj - j) <= 1e-8;
        ok = ok &&
             frobenius(mat_mul(transpose(w.m), mat_mul(diag, w.m)) - t) <= 1e-8 * frobenius(t);
        if (!ok) break;
    }
    report(3, ok, "200 seeded normal-form factorizations reconstruct with symplectic factors");
}

void criterion4() {
    Rng rng(4711);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 19); // up to 20
        auto [a, b] = testsupport::commuting_spd_pair(n, rng);
        {
            DenseMatrix t(2 * n, 2 * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    t(i, j) = a(i, j);
                    t(n + i, n + j) = b(i, j);
                }
            ok = ok && testsupport::max_abs_diff(class_a_closed_form(a, b),
                                                 symplectic_eigenvalues(t)) <= 1e-7;
        }
        {
            // ensure a - b stays SPD for the coupled-block form
            DenseMatrix a2 = a;
            const double shift = sym_eig(b).eigenvalues.back() + 0.25;
            for (std::size_t i = 0; i < n; ++i) a2(i, i) += shift;
            DenseMatrix t(2 * n, 2 * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    t(i, j) = a2(i, j);
                    t(n + i, n + j) = a2(i, j);
                    t(i, n + j) = b(i, j);
                    t(n + i, j) = b(i, j);
                }
            ok = ok && testsupport::max_abs_diff(class_b_closed_form(a2, b),
                                                 symplectic_eigenvalues(t)) <= 1e-7;
        }
    }
    report(4, ok, "commuting-pair closed forms agree with the assembled spectra (100 cases)");
}

void criterion5() {
    Rng rng(515151);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        const DenseMatrix t = testsupport::random_spd(2 * n, rng, 1e4);
        const DenseMatrix l = random_symplectic(n, 900 + trial, 0.35);
        const auto before = symplectic_eigenvalues(t);
        const auto after = symplectic_eigenvalues(symplectic_conjugate(t, l));
        ok = ok && testsupport::max_abs_diff(before, after) <= 1e-7;
    }
    report(5, ok, "symplectic spectra invariant under 100 seeded conjugations");
}

void criterion6(const std::vector<DenseMatrix>& corpus) {
    bool ok = true;
    std::size_t violations = 0;
    for (const DenseMatrix& t : corpus) violations += bounds_check(t).violations.size();
    const auto doubled = doubled_tridiagonal();
    for (std::size_t half_dim : {5, 10, 25}) {
        violations += bounds_check(truncate_hh(doubled, half_dim)).violations.size();
    }
    ok = violations == 0;
    report(6, ok, "symplectic spectra stay inside the eigenvalue interval across the corpus");
}

void criterion7() {
    const auto spec = make_block2x2("1/2");
    bool ok = true;
    for (std::size_t n : {2, 4, 6, 8, 10}) {
        for (double v : sym_eig(truncate_h(spec, n)).eigenvalues)
            ok = ok && (std::fabs(v - 1.0) <= 1e-9 || std::fabs(v + 1.0) <= 1e-9);
    }
    for (std::size_t n : {3, 5, 7, 9, 11}) {
        bool has_half = false;
        for (double v : sym_eig(truncate_h(spec, n)).eigenvalues)
            has_half = has_half || std::fabs(v - 0.5) <= 1e-9;
        ok = ok && has_half;
    }
    report(7, ok, "rotation-block sections oscillate between {-1,1} and sets containing 0.5");
}

void criterion8() {
    const auto spec = doubled_tridiagonal();
    std::vector<double> grid(10000);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = 1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid.size() - 1);

    // directed distance: containment of the spectrum in [1,3] at grid resolution
    auto directed = [&](const std::vector<double>& d) {
        double worst = 0.0;
        for (double x : d) {
            auto it = std::lower_bound(grid.begin(), grid.end(), x);
            double best = std::numeric_limits<double>::infinity();
            if (it != grid.end()) best = std::min(best, *it - x);
            if (it != grid.begin()) best = std::min(best, x - *(it - 1));
            worst = std::max(worst, best);
        }
        return worst;
    };

    std::vector<double> directed_dists, symmetric_dists;
    for (std::size_t n : {5, 10, 25, 50, 100, 500}) {
        const auto d = symplectic_eigenvalues(truncate_hh(spec, n));
        directed_dists.push_back(directed(d));
        symmetric_dists.push_back(hausdorff(d, grid));
    }
    // the two-sided distance measures convergence of the sections to [1,3]
    bool nonincreasing = true;
    for (std::size_t i = 1; i < symmetric_dists.size(); ++i)
        nonincreasing = nonincreasing && symmetric_dists[i] <= symmetric_dists[i - 1];
    const bool contained = directed_dists.back() < 1e-3;
    report(8, nonincreasing && contained,
           "section spectra converge into [1,3]: distances nonincreasing, final < 1e-3");
}

void criterion9() {
    GcoParams params; // defaults
    params.schedule = TruncationSchedule::make({5, 10, 25, 50, 100, 250, 500});
    const GcoReport pass = gco_check(diag_two_block(), params);
    const GcoReport fail =
        gco_check(make_class_a(make_diagonal("1 + 1/n"), make_diagonal("1")), params);
    const bool ok = pass.overall && fail.cond3.verdict == Verdict::Fail && !fail.overall;
    report(9, ok, "covariance certification: convergent spec passes, divergent spec fails");
}

void criterion10() {
    Rng rng(1010);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 11); // up to 12
        const auto [x, y] = testsupport::commuting_spd_pair(n, rng);
        const auto lx = sym_eig(x).eigenvalues;
        const auto ly = sym_eig(y).eigenvalues;
        const auto product = sym_eig(symmetrize(mat_mul(x, y))).eigenvalues;
        for (double p : product) {
            double best = std::numeric_limits<double>::infinity();
            for (double a : lx)
                for (double b : ly) best = std::min(best, std::fabs(p - a * b));
            ok = ok && best <= 1e-7;
        }
    }
    report(10, ok, "eigenvalues of commuting products lie in the pairwise product set");
}

} // namespace

int main() {
    const auto corpus = williamson_corpus();
    criterion1();
    criterion2();
    criterion3(corpus);
    criterion4();
    criterion5();
    criterion6(corpus);
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("%s (%d of 10 criteria failed)\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                failures);
    return failures;
}
