#pragma once

#include "gasper/matrix.hpp"

namespace gasper {

enum class CaseTag { AlphaSqLtBeta, AlphaSqEqBeta, AlphaSqGtBeta };

const char* case_tag_name(CaseTag tag);

// Entry statistics: s = sum of entries, q = sum of squares,
// alpha = s/n, beta = q/n, kappa = (n*beta - alpha^2)/(n-1).
// The case tag compares alpha^2 against beta exactly.
struct EntryStats {
    int n;
    Rat s;
    Rat q;
    Rat alpha;
    Rat beta;
    Rat kappa;
    CaseTag case_tag;
};

EntryStats entry_stats(const Matrix& m);

// Statistics of a prescribed entry multiset; every arrangement of the
// multiset into an n x n matrix shares them.
EntryStats multiset_stats(int n, const std::vector<Rat>& entries);

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
Rat det_exact(const Matrix& m);

// Partially pivoted LU in doubles; never traps.
double det_float(const MatD& m);
double det_float(const Matrix& m);

// det(xI + yJ) = x^{n-1} (x + n y).
Rat shifted_identity_det(const Rat& x, const Rat& y, int n);

// (xI + yJ)^{-1} = (1/x) I - y/(x(x+ny)) J.
// Throws SingularShiftedIdentity when x = 0 or x = -ny.
Matrix shifted_identity_inverse(const Rat& x, const Rat& y, int n);

}  // namespace gasper
