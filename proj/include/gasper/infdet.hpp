#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "gasper/matrix.hpp"

namespace gasper {

enum class SpecKind { DiagonalGeometric, FiniteSupport, Table };

// Description of an infinite matrix A with summable diagonal and
// square-summable entries, so that det(I - A) = lim det(I - A(n)) exists.
struct InfiniteMatrixSpec {
    SpecKind kind = SpecKind::FiniteSupport;

    // DIAGONAL_GEOMETRIC: A_{i,i} = c * r^i for i >= 1, |r| < 1.
    double c = 0.0;
    double r = 0.0;

    // FINITE_SUPPORT / TABLE: explicit nonzeros (i, j, value), 1-based.
    std::vector<std::tuple<int, int, double>> entries;

    double trace_sum() const;      // sum of A_{i,i}, signed
    double trace_abs_sum() const;  // sum of |A_{i,i}|
    double square_sum() const;     // sum of A_{i,j}^2

    // Partial sums over the n x n truncation.
    double trace_sum(int n) const;
    double square_sum(int n) const;
    double entry(int i, int j) const;  // 1-based
};

// Parses the JSON spec file format, e.g.
//   {"kind": "DIAGONAL_GEOMETRIC", "c": 0.5, "r": 0.5}
//   {"kind": "TABLE", "entries": [[1, 1, 0.5]]}
// Throws DivergentSpec when the summability hypotheses fail.
InfiniteMatrixSpec parse_infinite_spec(const std::string& json_text);
InfiniteMatrixSpec read_infinite_spec_file(const std::string& path);

// det(I - A(n)); n = 1 is allowed (scalar 1 - A_{1,1}).
double truncated_det(const InfiniteMatrixSpec& spec, int n);

// exp(1/2 sum A_{i,j}^2 - sum A_{i,i}).
double koch_bound(const InfiniteMatrixSpec& spec);

struct ConvergenceRow {
    int n;
    double det;           // det(I - A(n))
    double finite_bound;  // (1 + q/n - 2s/n)^{n/2} over the truncation
    double exp_bound;     // exp(q/2 - s) over the truncation; >= finite_bound
    double koch;
};

std::vector<ConvergenceRow> convergence_report(const InfiniteMatrixSpec& spec, int n_max);

}  // namespace gasper
