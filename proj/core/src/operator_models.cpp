#include "sympspec/operator_models.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "sympspec/eigen.hpp"
#include "sympspec/errors.hpp"

namespace sympspec {

namespace {

HOpPtr wrap(HOperatorSpec spec) { return std::make_shared<HOperatorSpec>(std::move(spec)); }

double eval_checked(const expr::Ast& formula, long k, const char* what) {
    double v = 0.0;
    try {
        v = expr::eval(formula, k);
    } catch (const NumericError& e) {
        throw SpecError(std::string(what) + ": formula fails at k = " + std::to_string(k) +
                        " (" + e.what() + ")");
    }
    if (!std::isfinite(v))
        throw SpecError(std::string(what) + ": formula evaluates non-finite at k = " +
                        std::to_string(k));
    return v;
}

} // namespace

HOpPtr make_diagonal(const std::string& formula) {
    return wrap({DiagonalSpec{expr::parse(formula), formula}});
}
HOpPtr make_toeplitz(std::vector<double> coeffs) {
    if (coeffs.empty()) throw SpecError("toeplitz: coefficient list must be nonempty");
    return wrap({ToeplitzSpec{std::move(coeffs)}});
}
HOpPtr make_block2x2(const std::string& a_formula) {
    return wrap({Block2x2DirectSumSpec{expr::parse(a_formula), a_formula}});
}
HOpPtr make_matrix_direct_sum(DenseMatrix block) {
    if (!block.square()) throw SpecError("matrix_direct_sum: block must be square");
    return wrap({MatrixDirectSumSpec{std::move(block)}});
}
HOpPtr make_scaled(double factor, HOpPtr child) { return wrap({ScaledSpec{factor, std::move(child)}}); }
HOpPtr make_sum(HOpPtr lhs, HOpPtr rhs) { return wrap({SumSpec{std::move(lhs), std::move(rhs)}}); }
HOpPtr make_product(HOpPtr lhs, HOpPtr rhs) {
    return wrap({ProductSpec{std::move(lhs), std::move(rhs)}});
}

bool is_diagonal(const HOperatorSpec& spec) {
    return std::holds_alternative<DiagonalSpec>(spec.node);
}

double diagonal_entry(const HOperatorSpec& spec, long k) {
    const auto* diag = std::get_if<DiagonalSpec>(&spec.node);
    if (!diag) throw SpecError("diagonal_entry: spec is not Diagonal");
    return eval_checked(diag->formula, k, "diagonal");
}

HHOperatorSpec make_class_a(HOpPtr a, HOpPtr b, bool assume_commuting) {
    return HHOperatorSpec{HHOperatorSpec::Kind::ClassA, std::move(a), std::move(b), {},
                          assume_commuting};
}
HHOperatorSpec make_class_b(HOpPtr a, HOpPtr b, bool assume_commuting) {
    return HHOperatorSpec{HHOperatorSpec::Kind::ClassB, std::move(a), std::move(b), {},
                          assume_commuting};
}
HHOperatorSpec make_doubled(HOpPtr a) {
    return HHOperatorSpec{HHOperatorSpec::Kind::Doubled, std::move(a), nullptr, {}, false};
}
HHOperatorSpec make_explicit(DenseMatrix t) {
    if (!t.square() || t.rows() % 2 != 0)
        throw SpecError("explicit: matrix must be square of even order");
    return HHOperatorSpec{HHOperatorSpec::Kind::Explicit, nullptr, nullptr, std::move(t), false};
}

TruncationSchedule TruncationSchedule::make(std::vector<std::size_t> ns, std::size_t cap) {
    if (ns.empty()) throw SpecError("schedule must be nonempty");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] == 0) throw SpecError("schedule entries must be positive");
        if (i > 0 && ns[i] <= ns[i - 1])
            throw SpecError("schedule must be strictly increasing");
        if (ns[i] > cap)
            throw SpecError("schedule entry " + std::to_string(ns[i]) + " exceeds cap " +
                            std::to_string(cap));
    }
    return TruncationSchedule{std::move(ns)};
}

DenseMatrix truncate_h(const HOperatorSpec& spec, std::size_t n) {
    if (n == 0) throw SpecError("truncate_h: n must be positive");
    return std::visit(
        [n](const auto& node) -> DenseMatrix {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, DiagonalSpec>) {
                DenseMatrix m(n, n);
                for (std::size_t k = 1; k <= n; ++k)
                    m(k - 1, k - 1) = eval_checked(node.formula, static_cast<long>(k), "diagonal");
                return m;
            } else if constexpr (std::is_same_v<T, ToeplitzSpec>) {
                DenseMatrix m(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const std::size_t off = i > j ? i - j : j - i;
                        m(i, j) = off < node.coeffs.size() ? node.coeffs[off] : 0.0;
                    }
                return m;
            } else if constexpr (std::is_same_v<T, Block2x2DirectSumSpec>) {
                DenseMatrix m(n, n);
                for (std::size_t i = 0; i < n; ++i) {
                    const long k = static_cast<long>(i / 2) + 1;
                    const double a = eval_checked(node.a_formula, k, "block2x2");
                    if (!(a > 0.0 && a < 1.0))
                        throw SpecError("block2x2: a_k must lie in (0,1), got " +
                                        std::to_string(a) + " at k = " + std::to_string(k));
                    const double b = std::sqrt(1.0 - a * a);
                    m(i, i) = (i % 2 == 0) ? a : -a;
                    if (i % 2 == 0 && i + 1 < n) {
                        m(i, i + 1) = b;
                        m(i + 1, i) = b;
                    }
                }
                return m;
            } else if constexpr (std::is_same_v<T, MatrixDirectSumSpec>) {
                const std::size_t bs = node.block.rows();
                DenseMatrix m(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (i / bs == j / bs) m(i, j) = node.block(i % bs, j % bs);
                return m;
            } else if constexpr (std::is_same_v<T, ScaledSpec>) {
                return node.factor * truncate_h(*node.child, n);
            } else if constexpr (std::is_same_v<T, SumSpec>) {
                return truncate_h(*node.lhs, n) + truncate_h(*node.rhs, n);
            } else {
                static_assert(std::is_same_v<T, ProductSpec>);
                return symmetrize(
                    mat_mul(truncate_h(*node.lhs, n), truncate_h(*node.rhs, n)));
            }
        },
        spec.node);
}

namespace {

void check_commuting_spd(const DenseMatrix& x, const DenseMatrix& y, double ctol,
                         bool assume_commuting, const char* klass) {
    const DenseMatrix comm = mat_mul(x, y) - mat_mul(y, x);
    const double bound = ctol * frobenius(x) * frobenius(y);
    if (frobenius(comm) > bound) {
        if (assume_commuting) {
            std::cerr << "warning: " << klass
                      << " truncations do not commute within tolerance (declared commuting)\n";
        } else {
            throw SpecError(std::string(klass) +
                            ": truncations fail the commutation check; set assume_commuting "
                            "to downgrade to a warning");
        }
    }
    for (const DenseMatrix* m : {&x, &y}) {
        const SymEigResult eig = sym_eig(*m);
        if (eig.eigenvalues.front() <= 0.0)
            throw SpecError(std::string(klass) + ": truncated block is not positive definite");
    }
}

} // namespace

DenseMatrix truncate_hh(const HHOperatorSpec& spec, std::size_t n, double ctol) {
    if (n == 0) throw SpecError("truncate_hh: n must be positive");
    const std::size_t n2 = 2 * n;
    switch (spec.kind) {
        case HHOperatorSpec::Kind::Explicit: {
            if (spec.t.rows() != n2)
                throw SpecError("explicit: truncation order does not match the stored matrix");
            if (asymmetry(spec.t) != 0.0) return symmetrize(spec.t);
            return spec.t;
        }
        case HHOperatorSpec::Kind::Doubled: {
            const DenseMatrix a = truncate_h(*spec.a, n);
            DenseMatrix t(n2, n2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    t(i, j) = a(i, j);
                    t(n + i, n + j) = a(i, j);
                }
            return t;
        }
        case HHOperatorSpec::Kind::ClassA: {
            const DenseMatrix a = truncate_h(*spec.a, n);
            const DenseMatrix b = truncate_h(*spec.b, n);
            check_commuting_spd(a, b, ctol, spec.assume_commuting, "class_a");
            DenseMatrix t(n2, n2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    t(i, j) = a(i, j);
                    t(n + i, n + j) = b(i, j);
                }
            return t;
        }
        case HHOperatorSpec::Kind::ClassB: {
            const DenseMatrix a = truncate_h(*spec.a, n);
            const DenseMatrix b = truncate_h(*spec.b, n);
            check_commuting_spd(a + b, a - b, ctol, spec.assume_commuting, "class_b");
            DenseMatrix t(n2, n2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    t(i, j) = a(i, j);
                    t(n + i, n + j) = a(i, j);
                    t(i, n + j) = b(i, j);
                    t(n + i, j) = b(i, j);
                }
            return t;
        }
    }
    throw SpecError("truncate_hh: corrupt spec kind");
}

std::pair<double, double> symbol_range(const ToeplitzSpec& spec, std::size_t samples) {
    if (samples < 64) throw SpecError("symbol_range: at least 64 samples required");
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = -std::numbers::pi +
                         2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(samples - 1);
        double v = spec.coeffs[0];
        for (std::size_t k = 1; k < spec.coeffs.size(); ++k)
            v += 2.0 * spec.coeffs[k] * std::cos(static_cast<double>(k) * t);
        if (i == 0) {
            lo = hi = v;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok) throw SpecError("spec file: unknown key '" + key + "'");
    }
}

DenseMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw SpecError("spec file: matrix must be a 2D array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    std::vector<double> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols)
            throw SpecError("spec file: ragged matrix rows");
        for (const auto& x : row) entries.push_back(x.get<double>());
    }
    return DenseMatrix(rows, cols, std::move(entries));
}

HOpPtr h_spec_from_json(const json& j);

HOpPtr h_child(const json& j, const char* key) {
    if (!j.contains(key))
        throw SpecError(std::string("spec file: missing '") + key + "'");
    return h_spec_from_json(j.at(key));
}

HOpPtr h_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw SpecError("spec file: H operator must be an object with a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (j.contains("space") && j.at("space").get<std::string>() != "H")
        throw SpecError("spec file: nested operator must have space 'H'");
    if (kind == "diagonal") {
        reject_unknown_keys(j, {"space", "kind", "entry_formula"});
        return make_diagonal(j.at("entry_formula").get<std::string>());
    }
    if (kind == "toeplitz") {
        reject_unknown_keys(j, {"space", "kind", "coeffs"});
        return make_toeplitz(j.at("coeffs").get<std::vector<double>>());
    }
    if (kind == "block2x2") {
        reject_unknown_keys(j, {"space", "kind", "entry_formula"});
        return make_block2x2(j.at("entry_formula").get<std::string>());
    }
    if (kind == "matrix_direct_sum") {
        reject_unknown_keys(j, {"space", "kind", "block"});
        return make_matrix_direct_sum(matrix_from_json(j.at("block")));
    }
    throw SpecError("spec file: unknown H operator kind '" + kind + "'");
}

} // namespace

HOpPtr load_h_spec_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("spec file: invalid JSON: ") + e.what());
    }
    return h_spec_from_json(j);
}

HHOperatorSpec load_hh_spec_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("spec file: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw SpecError("spec file: top level must be an object with a 'kind'");
    if (j.contains("space") && j.at("space").get<std::string>() != "HH")
        throw SpecError("spec file: top-level operator must have space 'HH'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "class_a" || kind == "class_b") {
        reject_unknown_keys(j, {"space", "kind", "a", "b", "assume_commuting"});
        const bool assume = j.value("assume_commuting", false);
        HOpPtr a = h_child(j, "a");
        HOpPtr b = h_child(j, "b");
        return kind == "class_a" ? make_class_a(std::move(a), std::move(b), assume)
                                 : make_class_b(std::move(a), std::move(b), assume);
    }
    if (kind == "doubled") {
        reject_unknown_keys(j, {"space", "kind", "a"});
        return make_doubled(h_child(j, "a"));
    }
    if (kind == "explicit") {
        reject_unknown_keys(j, {"space", "kind", "block"});
        return make_explicit(matrix_from_json(j.at("block")));
    }
    throw SpecError("spec file: unknown HH operator kind '" + kind + "'");
}

HHOperatorSpec load_hh_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_hh_spec_json(ss.str());
}

} // namespace sympspec
