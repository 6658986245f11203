#pragma once

#include "gasper/core.hpp"

namespace gasper {

enum class FormulaTag { BetaPower, AlphaKappa };

const char* formula_tag_name(FormulaTag tag);

struct BoundReport {
    EntryStats stats;
    double bound;       // the case-selected upper bound on |det|
    FormulaTag formula;
    double beta_power;  // beta^{n/2}, for comparison
    bool feasible;      // alpha^2 <= n*beta
};

// Three-case bound: alpha^2 < beta uses beta^{n/2}; alpha^2 >= beta uses
// |alpha| kappa^{(n-1)/2}.
BoundReport gasper_bound(const Matrix& m);
BoundReport gasper_bound(const EntryStats& stats);

struct ComplexBoundReport {
    // Statistics of the direct orientation (A, B).
    Rat alpha;
    Rat beta;
    Rat kappa;
    double bound_direct;   // bound on |det(A + iB)|
    double bound_swapped;  // same bound applied to (B, A)
    double bound;          // min of the two
};

// Bound for |det(A+iB)| via the 2n x 2n real embedding; both orientations
// are evaluated since |det(A+iB)| = |det(B+iA)| and the swap can win.
ComplexBoundReport complex_bound(const Matrix& a, const Matrix& b);

// Product of row 2-norms.
double hadamard_row_bound(const Matrix& m);

struct ExcessCheck {
    bool is_hadamard;  // MM^T = nI, checked exactly
    Rat excess;        // s(M)
    double bound;      // n^{3/2}
};

// Requires all entries in {-1, 1}; throws NotSignMatrix otherwise.
ExcessCheck best_excess_check(const Matrix& m);

struct RyserInput {
    int n;
    long t;  // number of ones in a 0/1 matrix
};

// Three cases on t vs n; k = t/n.
double ryser_bound(const RyserInput& input);

struct BrentInput {
    int n;
    double epsilon;
    bool zero_diagonal;
};

// (1 + 2e + n e^2)^{n/2}, or (1 + (n-1) e^2)^{n/2} with zero diagonal.
double brent_bound(const BrentInput& input);

struct TraceDetCheck {
    double lhs;  // (det M)^2
    double rhs;  // (q(M)/n)^n
    bool holds;
};

// (det A)^{2/n} <= q(A)/n, compared in squared form.
TraceDetCheck trace_det_check(const Matrix& m);

enum class ProgressionMode { FullSquare, Repeated };

struct ProgressionBound {
    int n;
    Rat p;
    Rat q;
    Rat r;
    Rat rho;
    Rat sigma;
    double bound;
};

// FULL_SQUARE: entries a permutation of p, p+q, ..., p+(n^2-1)q.
// REPEATED: each of p, ..., p+(n-1)q appears n times.
// Throws NonpositiveStep when q <= 0.
ProgressionBound progression_bound(int n, const Rat& p, const Rat& q, ProgressionMode mode);

struct RelateGap {
    double lhs;  // |alpha| ((n beta - alpha^2)/(n-1))^{(n-1)/2}
    double rhs;  // beta^{n/2}
    bool equal;  // alpha^2 = beta, decided exactly
};

// Throws InfeasiblePair when alpha^2 > n*beta or beta <= 0.
RelateGap relate_gap(const Rat& alpha, const Rat& beta, int n);

}  // namespace gasper
