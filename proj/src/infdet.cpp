#include "gasper/infdet.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gasper/core.hpp"

namespace gasper {

double InfiniteMatrixSpec::entry(int i, int j) const {
    if (kind == SpecKind::DiagonalGeometric)
        return i == j ? c * std::pow(r, i) : 0.0;
    double v = 0.0;
    for (const auto& [ei, ej, ev] : entries)
        if (ei == i && ej == j) v += ev;
    return v;
}

double InfiniteMatrixSpec::trace_sum() const {
    if (kind == SpecKind::DiagonalGeometric) return c * r / (1.0 - r);
    double s = 0.0;
    for (const auto& [i, j, v] : entries)
        if (i == j) s += v;
    return s;
}

double InfiniteMatrixSpec::trace_abs_sum() const {
    if (kind == SpecKind::DiagonalGeometric) return std::abs(c * r) / (1.0 - std::abs(r));
    double s = 0.0;
    for (const auto& [i, j, v] : entries)
        if (i == j) s += std::abs(v);
    return s;
}

double InfiniteMatrixSpec::square_sum() const {
    if (kind == SpecKind::DiagonalGeometric) return c * c * r * r / (1.0 - r * r);
    double s = 0.0;
    for (const auto& [i, j, v] : entries) {
        (void)i;
        (void)j;
        s += v * v;
    }
    return s;
}

double InfiniteMatrixSpec::trace_sum(int n) const {
    if (kind == SpecKind::DiagonalGeometric) {
        double s = 0.0, t = c * r;
        for (int i = 1; i <= n; ++i, t *= r) s += t;
        return s;
    }
    double s = 0.0;
    for (const auto& [i, j, v] : entries)
        if (i == j && i <= n) s += v;
    return s;
}

double InfiniteMatrixSpec::square_sum(int n) const {
    if (kind == SpecKind::DiagonalGeometric) {
        double s = 0.0, t = c * r;
        for (int i = 1; i <= n; ++i, t *= r) s += t * t;
        return s;
    }
    double s = 0.0;
    for (const auto& [i, j, v] : entries)
        if (i <= n && j <= n) s += v * v;
    return s;
}

InfiniteMatrixSpec parse_infinite_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad infinite-matrix spec: ") + e.what());
    }
    InfiniteMatrixSpec spec;
    std::string kind = j.value("kind", "");
    if (kind == "DIAGONAL_GEOMETRIC") {
        spec.kind = SpecKind::DiagonalGeometric;
        spec.c = j.at("c").get<double>();
        spec.r = j.at("r").get<double>();
        if (std::abs(spec.r) >= 1.0)
            throw DivergentSpec("geometric diagonal needs |r| < 1, got r = " +
                                std::to_string(spec.r));
    } else if (kind == "FINITE_SUPPORT" || kind == "TABLE") {
        spec.kind = kind == "TABLE" ? SpecKind::Table : SpecKind::FiniteSupport;
        for (const auto& e : j.at("entries")) {
            int i = e.at(0).get<int>();
            int jj = e.at(1).get<int>();
            double v = e.at(2).get<double>();
            if (i < 1 || jj < 1) throw ParseError("entry indices are 1-based and must be >= 1");
            spec.entries.emplace_back(i, jj, v);
        }
    } else {
        throw ParseError("unknown spec kind: '" + kind + "'");
    }
    return spec;
}

InfiniteMatrixSpec read_infinite_spec_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open spec file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_infinite_spec(ss.str());
}

double truncated_det(const InfiniteMatrixSpec& spec, int n) {
    if (n < 1) throw DimensionMismatch("truncation size must be >= 1");
    if (n == 1) return 1.0 - spec.entry(1, 1);
    MatD m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (i == j ? 1.0 : 0.0) - spec.entry(i + 1, j + 1);
    return det_float(m);
}

double koch_bound(const InfiniteMatrixSpec& spec) {
    return std::exp(0.5 * spec.square_sum() - spec.trace_sum());
}

std::vector<ConvergenceRow> convergence_report(const InfiniteMatrixSpec& spec, int n_max) {
    if (n_max < 1) throw DimensionMismatch("n_max must be >= 1");
    const double kb = koch_bound(spec);
    std::vector<ConvergenceRow> rows;
    rows.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        double qn = spec.square_sum(n), sn = spec.trace_sum(n);
        double x = qn / n - 2.0 * sn / n;
        ConvergenceRow row;
        row.n = n;
        row.det = truncated_det(spec, n);
        row.finite_bound = std::pow(1.0 + x, n / 2.0);
        row.exp_bound = std::exp(0.5 * qn - sn);
        row.koch = kb;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gasper
