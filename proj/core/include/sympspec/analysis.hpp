#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sympspec/operator_models.hpp"
#include "sympspec/symplectic.hpp"

namespace sympspec {

/// Per-n sorted eigenvalue sets of truncations.
struct SweepReport {
    enum class Kind { Symplectic, Spectral };
    Kind kind;
    std::vector<std::size_t> schedule;
    std::vector<std::vector<double>> per_n; // aligned with schedule, each ascending

    bool operator==(const SweepReport&) const = default;
};

/// Finite-section convergence evidence. Branches count from the largest value
/// down (k = 1 is the top branch).
struct BranchStat {
    std::size_t k;
    std::vector<double> values; // d_k over the schedule points where defined
    double last_delta;
    bool stabilized;
};
struct ConvergenceStats {
    std::vector<double> hausdorff_successive; // length = schedule length - 1
    std::vector<BranchStat> branches;
};

struct BoundsViolation {
    std::size_t n; // order of the matrix
    std::size_t k; // 1-based index of the offending symplectic eigenvalue
    double d_k;
    double excess;
};
struct BoundsReport {
    double m;       // smallest eigenvalue
    double m_upper; // largest eigenvalue
    std::vector<BoundsViolation> violations;
};

enum class Verdict { Pass, Fail, EvidenceOnly };

struct GcoCondition {
    Verdict verdict;
    // cond1: (n, lambda_min) over the schedule; cond2/cond3: (N, partial sum).
    std::vector<std::pair<long, double>> series;
};
struct GcoReport {
    GcoCondition cond1, cond2, cond3;
    bool overall; // all three Pass
};

struct GcoParams {
    TruncationSchedule schedule;
    double hs_tail_tol = 1e-10;
    double trace_tail_tol = 1e-10;
    int stagnation_window = 3;
    // Diagonal specs reduce conditions 2 and 3 to scalar series; those are
    // summed out to this index, far beyond any affordable matrix truncation.
    long series_max_n = 1000000;
};

SweepReport symplectic_sweep(const HHOperatorSpec& spec, const TruncationSchedule& schedule);
SweepReport spectral_sweep(const HOperatorSpec& spec, const TruncationSchedule& schedule);
inline SweepReport spectral_sweep(const HOpPtr& spec, const TruncationSchedule& s) {
    return spectral_sweep(*spec, s);
}

ConvergenceStats convergence_stats(const SweepReport& report, double branch_tol);

BoundsReport bounds_check(const DenseMatrix& t);

/// sorted eigenvalues of the symmetrized sqrt(a)*sqrt(b); a, b SPD commuting.
std::vector<double> class_a_closed_form(const DenseMatrix& a, const DenseMatrix& b,
                                        double ctol = 1e-10);
/// sorted eigenvalues of the symmetrized sqrt(a+b)*sqrt(a-b).
std::vector<double> class_b_closed_form(const DenseMatrix& a, const DenseMatrix& b,
                                        double ctol = 1e-10);

GcoReport gco_check(const HHOperatorSpec& spec, const GcoParams& params);

/// Hausdorff distance between two nonempty finite point sets on R (sorted).
double hausdorff(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace sympspec
