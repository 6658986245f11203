#pragma once

#include <optional>

#include "gasper/core.hpp"

namespace gasper {

enum class Variant { ShiftedIdentity, OrthogonalBlocks };

const char* variant_name(Variant v);

struct ExtremalRecipe {
    int n;
    Rat alpha;
    Rat beta;
    Variant variant;
    double gamma;        // construction parameter
    MatD matrix;
    double claimed_det;  // alpha * gamma^{n-1}, or beta^{n/2}
    // Present when the construction parameter is rational, making the
    // whole matrix exactly representable.
    std::optional<Matrix> exact;
};

// gamma I + ((alpha - gamma)/n) J with gamma = sqrt((n beta - alpha^2)/(n-1)).
// Requires beta > 0 and alpha^2 <= n*beta.
ExtremalRecipe construct_shifted(int n, const Rat& alpha, const Rat& beta);

// Block-diagonal rotation construction attaining det = beta^{n/2}.
// Requires beta > 0 and alpha^2 <= beta. Negative alpha is handled by
// negating the positive-alpha matrix (plus a first-two-rows swap for odd n).
ExtremalRecipe construct_orthogonal(int n, const Rat& alpha, const Rat& beta);

struct CharacterizationReport {
    double delta;      // (alpha^2 - beta)/(n-1)
    bool rowsum_ok;    // row sums equal alpha
    bool colsum_ok;    // column sums equal alpha
    bool gram_ok;      // MM^T = beta I, or (beta-delta) I + delta J
    bool det_ok;       // det = beta^{n/2}, or |alpha| (beta-delta)^{(n-1)/2}
    double max_residual;
};

// Checks the necessary maximizer conditions in the regime selected by the
// sign of alpha^2 - beta (both regimes when equal within tol). Never
// asserts maximality.
CharacterizationReport verify_characterization(const MatD& m, double tol);
CharacterizationReport verify_characterization(const Matrix& m, double tol);

}  // namespace gasper
