// Command-line front end: parse matrix/operator files, run computations,
// emit JSON or CSV reports.
//
// Exit codes: 0 success / GCO pass, 1 GCO fail, 2 input or parse error,
// 3 precondition violation (non-SPD, asymmetric, odd order), 4 numerical
// failure, 5 GCO evidence-only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympspec/analysis.hpp"
#include "sympspec/dense_matrix.hpp"
#include "sympspec/errors.hpp"
#include "sympspec/expr.hpp"
#include "sympspec/operator_models.hpp"
#include "sympspec/report_io.hpp"
#include "sympspec/symplectic.hpp"

namespace {

using namespace sympspec;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitEvidenceOnly = 5;

struct Options {
    std::string matrix_path;
    std::string spec_path;
    std::string schedule_text = "5,10,25,50,100,250,500";
    std::string format = "json";
    std::string out_path;
    double branch_tol = 1e-9;
    bool print_m = false;
    // gco
    double hs_tail_tol = 1e-10;
    double trace_tail_tol = 1e-10;
    int window = 3;
    long series_max_n = 1000000;
    // seq-eval
    std::string expr_text;
    long n = 1;
};

TruncationSchedule parse_schedule(const std::string& text) {
    if (text.empty()) throw SpecError("schedule must not be empty");
    std::vector<std::size_t> ns;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw SpecError("invalid schedule entry '" + item + "'");
        }
        if (pos != item.size()) throw SpecError("invalid schedule entry '" + item + "'");
        ns.push_back(v);
    }
    return TruncationSchedule::make(std::move(ns));
}

void emit(const Options& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(opts.out_path);
        if (!out) throw SpecError("cannot open output file: " + opts.out_path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

DenseMatrix load_matrix(const Options& opts) {
    if (opts.matrix_path.empty()) throw SpecError("--matrix is required");
    return read_csv_file(opts.matrix_path);
}

void require_even_order(const DenseMatrix& m) {
    if (!m.square() || m.rows() % 2 != 0)
        throw ParseError("matrix must be square of even order", 0);
}

int run_williamson(const Options& opts) {
    const DenseMatrix t = load_matrix(opts);
    require_even_order(t);
    const WilliamsonResult result = williamson(t);
    if (opts.format == "csv") {
        std::ostringstream out;
        out << "k,d\n";
        char buf[32];
        for (std::size_t k = 0; k < result.d.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", result.d[k]);
            out << (k + 1) << ',' << buf << '\n';
        }
        emit(opts, out.str());
    } else {
        emit(opts, to_json(result, opts.print_m));
    }
    return kExitOk;
}

int run_sympeig(const Options& opts) {
    const DenseMatrix t = load_matrix(opts);
    require_even_order(t);
    const std::vector<double> d = symplectic_eigenvalues(t);
    if (opts.format == "csv") {
        std::ostringstream out;
        out << "k,d\n";
        char buf[32];
        for (std::size_t k = 0; k < d.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", d[k]);
            out << (k + 1) << ',' << buf << '\n';
        }
        emit(opts, out.str());
    } else {
        nlohmann::json j = {{"d", d}};
        emit(opts, j.dump(2));
    }
    return kExitOk;
}

int run_sweep(const Options& opts) {
    if (opts.spec_path.empty()) throw SpecError("--spec is required");
    const TruncationSchedule schedule = parse_schedule(opts.schedule_text);
    std::ifstream in(opts.spec_path);
    if (!in) throw SpecError("cannot open spec file: " + opts.spec_path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();

    SweepReport report;
    // top-level "space" selects between a spectral (H) and symplectic (HH) sweep
    const auto j = nlohmann::json::parse(text, nullptr, false);
    const bool h_space = j.is_object() && j.value("space", "HH") == "H";
    if (h_space) {
        report = spectral_sweep(load_h_spec_json(text), schedule);
    } else {
        report = symplectic_sweep(load_hh_spec_json(text), schedule);
    }
    if (opts.format == "csv") {
        std::ostringstream out;
        write_sweep_csv(out, report);
        emit(opts, out.str());
    } else {
        const ConvergenceStats stats = report.schedule.size() >= 2
                                           ? convergence_stats(report, opts.branch_tol)
                                           : ConvergenceStats{};
        emit(opts, report.schedule.size() >= 2 ? to_json(report, stats) : to_json(report));
    }
    return kExitOk;
}

int run_gco(const Options& opts) {
    if (opts.spec_path.empty()) throw SpecError("--spec is required");
    GcoParams params;
    params.schedule = parse_schedule(opts.schedule_text);
    params.hs_tail_tol = opts.hs_tail_tol;
    params.trace_tail_tol = opts.trace_tail_tol;
    params.stagnation_window = opts.window;
    params.series_max_n = opts.series_max_n;
    const GcoReport report = gco_check(load_hh_spec_file(opts.spec_path), params);
    emit(opts, to_json(report));
    if (report.overall) return kExitOk;
    if (report.cond1.verdict == Verdict::Fail || report.cond2.verdict == Verdict::Fail ||
        report.cond3.verdict == Verdict::Fail)
        return kExitFail;
    return kExitEvidenceOnly;
}

int run_bounds(const Options& opts) {
    const DenseMatrix t = load_matrix(opts);
    require_even_order(t);
    emit(opts, to_json(bounds_check(t)));
    return kExitOk;
}

int run_seq_eval(const Options& opts) {
    const double value = expr::eval(expr::parse(opts.expr_text), opts.n);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    emit(opts, buf);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic spectra, Williamson normal forms, truncation sweeps"};
    app.require_subcommand(1);
    Options opts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opts.format, "Output format: json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
    };

    auto* williamson_cmd =
        app.add_subcommand("williamson", "Williamson normal form of an SPD matrix (CSV file)");
    williamson_cmd->add_option("--matrix", opts.matrix_path, "CSV matrix file")->required();
    williamson_cmd->add_flag("--print-m", opts.print_m, "Include the transformation M (json only)");
    add_common(williamson_cmd);

    auto* sympeig_cmd =
        app.add_subcommand("sympeig", "Symplectic eigenvalues of an SPD matrix (CSV file)");
    sympeig_cmd->add_option("--matrix", opts.matrix_path, "CSV matrix file")->required();
    add_common(sympeig_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Truncation sweep of an operator spec (JSON)");
    sweep_cmd->add_option("--spec", opts.spec_path, "Operator spec file")->required();
    sweep_cmd->add_option("--schedule", opts.schedule_text,
                          "Comma-separated half-dimensions (default 5,10,25,50,100,250,500)");
    sweep_cmd->add_option("--branch-tol", opts.branch_tol, "Branch stabilization tolerance");
    add_common(sweep_cmd);

    auto* gco_cmd = app.add_subcommand("gco", "Gaussian covariance operator certification");
    gco_cmd->add_option("--spec", opts.spec_path, "Operator spec file (class_a or class_b)")
        ->required();
    gco_cmd->add_option("--schedule", opts.schedule_text, "Truncation schedule");
    gco_cmd->add_option("--hs-tail-tol", opts.hs_tail_tol, "Hilbert-Schmidt tail tolerance");
    gco_cmd->add_option("--trace-tail-tol", opts.trace_tail_tol, "Trace-class tail tolerance");
    gco_cmd->add_option("--window", opts.window, "Stagnation window (schedule points)");
    gco_cmd->add_option("--series-max-n", opts.series_max_n,
                        "Scalar series length for diagonal specs");
    add_common(gco_cmd);

    auto* bounds_cmd =
        app.add_subcommand("bounds", "Eigenvalue bounds check for symplectic eigenvalues");
    bounds_cmd->add_option("--matrix", opts.matrix_path, "CSV matrix file")->required();
    add_common(bounds_cmd);

    auto* seq_cmd = app.add_subcommand("seq-eval", "Evaluate a sequence formula at an index");
    seq_cmd->add_option("expr", opts.expr_text, "Formula in the variable n")->required();
    seq_cmd->add_option("--n", opts.n, "Index (default 1)")->check(CLI::PositiveNumber);
    add_common(seq_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (williamson_cmd->parsed()) return run_williamson(opts);
        if (sympeig_cmd->parsed()) return run_sympeig(opts);
        if (sweep_cmd->parsed()) return run_sweep(opts);
        if (gco_cmd->parsed()) return run_gco(opts);
        if (bounds_cmd->parsed()) return run_bounds(opts);
        if (seq_cmd->parsed()) return run_seq_eval(opts);
    } catch (const ParseError& e) {
        std::cerr << "error: input: " << e.what() << '\n';
        return kExitInput;
    } catch (const SpecError& e) {
        std::cerr << "error: input: " << e.what() << '\n';
        return kExitInput;
    } catch (const DimensionError& e) {
        std::cerr << "error: input: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const NumericError& e) {
        std::cerr << "error: numerical: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
