#include "sympspec/report_io.hpp"

#include <ostream>

#include <json.hpp>

#include "sympspec/errors.hpp"

namespace sympspec {

namespace {

using nlohmann::json;

const char* kind_name(SweepReport::Kind kind) {
    return kind == SweepReport::Kind::Symplectic ? "symplectic" : "spectral";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::EvidenceOnly: return "evidence-only";
    }
    return "?";
}

json sweep_json(const SweepReport& report) {
    json per_n = json::array();
    for (std::size_t i = 0; i < report.schedule.size(); ++i)
        per_n.push_back({{"n", report.schedule[i]}, {"values", report.per_n[i]}});
    return {{"kind", kind_name(report.kind)},
            {"schedule", report.schedule},
            {"per_n", per_n}};
}

json condition_json(const GcoCondition& cond) {
    json series = json::array();
    for (const auto& [n, v] : cond.series) series.push_back({{"n", n}, {"value", v}});
    return {{"verdict", verdict_name(cond.verdict)}, {"series", series}};
}

json matrix_json(const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::string to_json(const SweepReport& report) { return sweep_json(report).dump(2); }

std::string to_json(const SweepReport& report, const ConvergenceStats& stats) {
    json j = sweep_json(report);
    j["convergence"] = {{"hausdorff_successive", stats.hausdorff_successive}};
    json branches = json::array();
    for (const auto& b : stats.branches)
        branches.push_back({{"k", b.k},
                            {"values", b.values},
                            {"last_delta", b.last_delta},
                            {"stabilized", b.stabilized}});
    j["convergence"]["branches"] = branches;
    return j.dump(2);
}

std::string to_json(const GcoReport& report) {
    json j = {{"cond1", condition_json(report.cond1)},
              {"cond2", condition_json(report.cond2)},
              {"cond3", condition_json(report.cond3)},
              {"overall", report.overall}};
    return j.dump(2);
}

std::string to_json(const BoundsReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"n", v.n}, {"k", v.k}, {"d_k", v.d_k}, {"excess", v.excess}});
    json j = {{"m", report.m}, {"M", report.m_upper}, {"violations", violations}};
    return j.dump(2);
}

std::string to_json(const WilliamsonResult& result, bool include_m) {
    json j = {{"d", result.d}, {"residual", result.residual}};
    if (include_m) j["M"] = matrix_json(result.m);
    return j.dump(2);
}

SweepReport sweep_report_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what(), 0);
    }
    SweepReport report;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "symplectic")
        report.kind = SweepReport::Kind::Symplectic;
    else if (kind == "spectral")
        report.kind = SweepReport::Kind::Spectral;
    else
        throw ParseError("invalid report kind '" + kind + "'", 0);
    report.schedule = j.at("schedule").get<std::vector<std::size_t>>();
    for (const auto& entry : j.at("per_n"))
        report.per_n.push_back(entry.at("values").get<std::vector<double>>());
    if (report.per_n.size() != report.schedule.size())
        throw ParseError("report schedule and per_n lengths disagree", 0);
    return report;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
    out << "n,k,value\n";
    char buf[32];
    for (std::size_t i = 0; i < report.schedule.size(); ++i) {
        for (std::size_t k = 0; k < report.per_n[i].size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", report.per_n[i][k]);
            out << report.schedule[i] << ',' << (k + 1) << ',' << buf << '\n';
        }
    }
}

} // namespace sympspec
