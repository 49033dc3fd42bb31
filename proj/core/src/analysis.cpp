#include "sympspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "sympspec/eigen.hpp"
#include "sympspec/errors.hpp"

namespace sympspec {

SweepReport symplectic_sweep(const HHOperatorSpec& spec, const TruncationSchedule& schedule) {
    SweepReport report;
    report.kind = SweepReport::Kind::Symplectic;
    report.schedule = schedule.ns;
    report.per_n.reserve(schedule.ns.size());
    for (std::size_t n : schedule.ns)
        report.per_n.push_back(symplectic_eigenvalues(truncate_hh(spec, n)));
    return report;
}

SweepReport spectral_sweep(const HOperatorSpec& spec, const TruncationSchedule& schedule) {
    SweepReport report;
    report.kind = SweepReport::Kind::Spectral;
    report.schedule = schedule.ns;
    report.per_n.reserve(schedule.ns.size());
    for (std::size_t n : schedule.ns)
        report.per_n.push_back(sym_eig(truncate_h(spec, n)).eigenvalues);
    return report;
}

double hausdorff(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.empty() || ys.empty()) throw PreconditionError("hausdorff: empty input set");
    // both sorted; one-sided sup of nearest-point distances, then max of the two
    auto one_sided = [](const std::vector<double>& from, const std::vector<double>& to) {
        double worst = 0.0;
        for (double x : from) {
            auto it = std::lower_bound(to.begin(), to.end(), x);
            double best = std::numeric_limits<double>::infinity();
            if (it != to.end()) best = std::min(best, *it - x);
            if (it != to.begin()) best = std::min(best, x - *(it - 1));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(xs, ys), one_sided(ys, xs));
}

ConvergenceStats convergence_stats(const SweepReport& report, double branch_tol) {
    if (report.schedule.size() < 2)
        throw PreconditionError("convergence_stats: at least two schedule points required");
    ConvergenceStats stats;
    for (std::size_t i = 0; i + 1 < report.per_n.size(); ++i)
        stats.hausdorff_successive.push_back(hausdorff(report.per_n[i], report.per_n[i + 1]));

    // Branch k follows the k-th largest value; it needs at least the last two
    // schedule points to have a delta.
    const auto& last = report.per_n.back();
    const auto& prev = report.per_n[report.per_n.size() - 2];
    const std::size_t branch_count = std::min(last.size(), prev.size());
    for (std::size_t k = 1; k <= branch_count; ++k) {
        BranchStat branch;
        branch.k = k;
        for (const auto& values : report.per_n) {
            if (values.size() >= k) branch.values.push_back(values[values.size() - k]);
        }
        const std::size_t m = branch.values.size();
        branch.last_delta = std::fabs(branch.values[m - 1] - branch.values[m - 2]);
        branch.stabilized = branch.last_delta < branch_tol;
        stats.branches.push_back(std::move(branch));
    }
    return stats;
}

BoundsReport bounds_check(const DenseMatrix& t) {
    const SymEigResult eig = sym_eig(t);
    if (eig.eigenvalues.front() <= 0.0)
        throw PreconditionError("bounds_check: matrix is not positive definite");
    BoundsReport report;
    report.m = eig.eigenvalues.front();
    report.m_upper = eig.eigenvalues.back();
    const std::vector<double> d = symplectic_eigenvalues(t);
    const double slack = 1e-9 * report.m_upper;
    for (std::size_t k = 0; k < d.size(); ++k) {
        double excess = 0.0;
        if (d[k] < report.m - slack) excess = report.m - d[k];
        if (d[k] > report.m_upper + slack) excess = d[k] - report.m_upper;
        if (excess > 0.0)
            report.violations.push_back({t.rows(), k + 1, d[k], excess});
    }
    return report;
}

namespace {

std::vector<double> commuting_sqrt_product(const DenseMatrix& x, const DenseMatrix& y,
                                           double ctol, const char* who) {
    const DenseMatrix comm = mat_mul(x, y) - mat_mul(y, x);
    if (frobenius(comm) > ctol * frobenius(x) * frobenius(y))
        throw PreconditionError(std::string(who) + ": inputs fail the commutation check");
    const DenseMatrix p = symmetrize(mat_mul(sqrt_psd(x), sqrt_psd(y)));
    return sym_eig(p).eigenvalues;
}

} // namespace

std::vector<double> class_a_closed_form(const DenseMatrix& a, const DenseMatrix& b,
                                        double ctol) {
    return commuting_sqrt_product(a, b, ctol, "class_a_closed_form");
}

std::vector<double> class_b_closed_form(const DenseMatrix& a, const DenseMatrix& b,
                                        double ctol) {
    return commuting_sqrt_product(a + b, a - b, ctol, "class_b_closed_form");
}

namespace {

// The two operators whose conditions are actually tested: for ClassA the
// blocks (A, B); for ClassB the diagonalized pair (A+B, A-B).
struct ReducedPair {
    bool diagonal; // both reduce to scalar diagonal series
    // diagonal entries at index k (only valid when diagonal)
    std::function<double(long)> first, second;
    // truncations at order n (always valid)
    std::function<DenseMatrix(std::size_t)> first_n, second_n;
};

ReducedPair reduce(const HHOperatorSpec& spec) {
    if (spec.kind != HHOperatorSpec::Kind::ClassA && spec.kind != HHOperatorSpec::Kind::ClassB)
        throw PreconditionError("gco_check: spec must be ClassA or ClassB");
    const bool class_a = spec.kind == HHOperatorSpec::Kind::ClassA;
    ReducedPair pair;
    pair.diagonal = is_diagonal(*spec.a) && is_diagonal(*spec.b);
    const HOpPtr a = spec.a, b = spec.b;
    if (class_a) {
        if (pair.diagonal) {
            pair.first = [a](long k) { return diagonal_entry(*a, k); };
            pair.second = [b](long k) { return diagonal_entry(*b, k); };
        }
        pair.first_n = [a](std::size_t n) { return truncate_h(*a, n); };
        pair.second_n = [b](std::size_t n) { return truncate_h(*b, n); };
    } else {
        if (pair.diagonal) {
            pair.first = [a, b](long k) { return diagonal_entry(*a, k) + diagonal_entry(*b, k); };
            pair.second = [a, b](long k) { return diagonal_entry(*a, k) - diagonal_entry(*b, k); };
        }
        pair.first_n = [a, b](std::size_t n) { return truncate_h(*a, n) + truncate_h(*b, n); };
        pair.second_n = [a, b](std::size_t n) { return truncate_h(*a, n) - truncate_h(*b, n); };
    }
    return pair;
}

// Partial sums of a nonnegative scalar series, recorded at geometric
// checkpoints; the stagnation test looks at the final `window` single-term
// increments of the full sequence.
GcoCondition scalar_series_condition(const std::function<double(long)>& term, long max_n,
                                     double tail_tol, int window) {
    GcoCondition cond;
    double sum = 0.0;
    long checkpoint = 8;
    for (long k = 1; k <= max_n; ++k) {
        sum += term(k);
        if (k == checkpoint || k == max_n) {
            cond.series.emplace_back(k, sum);
            if (k == checkpoint) checkpoint *= 4;
        }
    }
    bool stagnated = true;
    for (long k = max_n - window + 1; k <= max_n; ++k)
        if (term(k) >= tail_tol) stagnated = false;
    cond.verdict = stagnated ? Verdict::Pass : Verdict::Fail;
    return cond;
}

// Partial sums over the truncation schedule; increments between consecutive
// schedule points must stagnate. `cap` limits the best verdict attainable.
GcoCondition matrix_series_condition(const std::function<double(std::size_t)>& partial,
                                     const TruncationSchedule& schedule, double tail_tol,
                                     int window, Verdict cap) {
    GcoCondition cond;
    for (std::size_t n : schedule.ns)
        cond.series.emplace_back(static_cast<long>(n), partial(n));
    const std::size_t m = cond.series.size();
    bool stagnated = true;
    for (int i = 0; i < window; ++i) {
        const std::size_t hi = m - 1 - static_cast<std::size_t>(i);
        if (hi == 0) break;
        if (cond.series[hi].second - cond.series[hi - 1].second >= tail_tol) stagnated = false;
    }
    cond.verdict = stagnated ? cap : Verdict::Fail;
    return cond;
}

double hs_norm_sq_minus_identity(const DenseMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double x = m(i, j) - (i == j ? 1.0 : 0.0);
            s += x * x;
        }
    return s;
}

double singular_value_sum_minus_identity(const DenseMatrix& x, const DenseMatrix& y) {
    // singular values of X*Y - I via eigenvalues of the symmetric square
    const std::size_t n = x.rows();
    DenseMatrix p = mat_mul(x, y);
    for (std::size_t i = 0; i < n; ++i) p(i, i) -= 1.0;
    const DenseMatrix sq = symmetrize(mat_mul(transpose(p), p));
    double sum = 0.0;
    for (double l : sym_eig(sq).eigenvalues) sum += std::sqrt(std::max(l, 0.0));
    return sum;
}

} // namespace

GcoReport gco_check(const HHOperatorSpec& spec, const GcoParams& params) {
    if (params.schedule.ns.size() < static_cast<std::size_t>(params.stagnation_window) + 1)
        throw PreconditionError("gco_check: schedule too short for the stagnation window");
    const ReducedPair pair = reduce(spec);
    GcoReport report;

    // Condition 1: positivity of X_n - (Y_n)^{-1} over the schedule. The
    // truncated inverse equals the inverse of the truncation only for
    // diagonal operators, so non-diagonal specs cannot earn a Pass here.
    {
        GcoCondition cond;
        bool nonnegative = true;
        for (std::size_t n : params.schedule.ns) {
            const DenseMatrix diff = pair.first_n(n) - inv_spd(pair.second_n(n));
            const double lmin = sym_eig(diff).eigenvalues.front();
            cond.series.emplace_back(static_cast<long>(n), lmin);
            if (lmin < -1e-9) nonnegative = false;
        }
        if (!pair.diagonal)
            cond.verdict = Verdict::EvidenceOnly;
        else
            cond.verdict = nonnegative ? Verdict::Pass : Verdict::Fail;
        report.cond1 = cond;
    }

    // Condition 2: Hilbert-Schmidt tails of X - I and Y - I.
    if (pair.diagonal) {
        report.cond2 = scalar_series_condition(
            [&](long k) {
                const double dx = pair.first(k) - 1.0;
                const double dy = pair.second(k) - 1.0;
                return dx * dx + dy * dy;
            },
            params.series_max_n, params.hs_tail_tol, params.stagnation_window);
    } else {
        report.cond2 = matrix_series_condition(
            [&](std::size_t n) {
                return hs_norm_sq_minus_identity(pair.first_n(n)) +
                       hs_norm_sq_minus_identity(pair.second_n(n));
            },
            params.schedule, params.hs_tail_tol, params.stagnation_window, Verdict::Pass);
    }

    // Condition 3: trace-class tail of X*Y - I.
    if (pair.diagonal) {
        report.cond3 = scalar_series_condition(
            [&](long k) { return std::fabs(pair.first(k) * pair.second(k) - 1.0); },
            params.series_max_n, params.trace_tail_tol, params.stagnation_window);
    } else {
        // singular-value sums of truncations; verdict capped at evidence-only
        report.cond3 = matrix_series_condition(
            [&](std::size_t n) {
                return singular_value_sum_minus_identity(pair.first_n(n), pair.second_n(n));
            },
            params.schedule, params.trace_tail_tol, params.stagnation_window,
            Verdict::EvidenceOnly);
    }

    report.overall = report.cond1.verdict == Verdict::Pass &&
                     report.cond2.verdict == Verdict::Pass &&
                     report.cond3.verdict == Verdict::Pass;
    return report;
}

} // namespace sympspec
