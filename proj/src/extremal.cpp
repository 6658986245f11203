#include "gasper/extremal.hpp"

#include <cmath>

namespace gasper {

const char* variant_name(Variant v) {
    return v == Variant::ShiftedIdentity ? "SHIFTED_IDENTITY" : "ORTHOGONAL_BLOCKS";
}

ExtremalRecipe construct_shifted(int n, const Rat& alpha, const Rat& beta) {
    if (n < 2) throw DimensionMismatch("dimension must be >= 2");
    if (beta <= 0) throw InfeasiblePair("beta must be positive, got " + format_rational(beta));
    Rat a2 = alpha * alpha;
    if (a2 > n * beta)
        throw InfeasiblePair("alpha^2 = " + format_rational(a2) + " exceeds n*beta = " +
                             format_rational(n * beta));

    ExtremalRecipe rec;
    rec.n = n;
    rec.alpha = alpha;
    rec.beta = beta;
    rec.variant = Variant::ShiftedIdentity;

    Rat gamma_sq = (n * beta - a2) / (n - 1);
    rec.gamma = std::sqrt(to_double(gamma_sq));

    Rat gamma_rat;
    if (rational_sqrt(gamma_sq, gamma_rat)) {
        rec.exact = Matrix::shifted(gamma_rat, (alpha - gamma_rat) / n, n);
        rec.matrix = rec.exact->to_double();
    } else {
        const double g = rec.gamma;
        const double off = (to_double(alpha) - g) / n;
        MatD m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? g + off : off;
        rec.matrix = m;
    }
    rec.claimed_det = to_double(alpha) * std::pow(rec.gamma, n - 1);
    return rec;
}

// 2x2 rotation-like block with s = 2a, q = 2b, det = b.
static void place_a_block(MatD& m, int at, double a, double b) {
    double w = std::sqrt(b - a * a);
    m(at, at) = a;
    m(at, at + 1) = w;
    m(at + 1, at) = -w;
    m(at + 1, at + 1) = a;
}

ExtremalRecipe construct_orthogonal(int n, const Rat& alpha, const Rat& beta) {
    if (n < 2) throw DimensionMismatch("dimension must be >= 2");
    if (beta <= 0) throw InfeasiblePair("beta must be positive, got " + format_rational(beta));
    Rat a2 = alpha * alpha;
    if (a2 > beta)
        throw InfeasiblePair("alpha^2 = " + format_rational(a2) + " exceeds beta = " +
                             format_rational(beta) + " (orthogonal-blocks construction)");

    ExtremalRecipe rec;
    rec.n = n;
    rec.alpha = alpha;
    rec.beta = beta;
    rec.variant = Variant::OrthogonalBlocks;

    const bool negate = alpha < 0;
    const double a = std::abs(to_double(alpha));
    const double b = to_double(beta);
    const double sb = std::sqrt(b);
    const double gamma = 0.5 * (3.0 * a / sb - 1.0);
    rec.gamma = gamma;

    MatD m(n);
    if (n % 2 == 0) {
        for (int k = 0; k < n / 2; ++k) place_a_block(m, 2 * k, a, b);
    } else {
        for (int k = 0; k < (n - 3) / 2; ++k) place_a_block(m, 2 * k, a, b);
        // 3x3 tail block: sqrt(b) * rotation-by-gamma on the first two
        // coordinates, identity on the third.
        int at = n - 3;
        double w = std::sqrt(1.0 - gamma * gamma);
        m(at, at) = sb * gamma;
        m(at, at + 1) = sb * w;
        m(at + 1, at) = -sb * w;
        m(at + 1, at + 1) = sb * gamma;
        m(at + 2, at + 2) = sb;
    }

    if (negate) {
        for (double& v : m.a) v = -v;
        if (n % 2 == 1)
            for (int j = 0; j < n; ++j) std::swap(m(0, j), m(1, j));
    }

    rec.matrix = m;
    rec.claimed_det = std::pow(b, n / 2.0);
    return rec;
}

static bool close(double x, double target, double tol, double& max_residual) {
    double diff = std::abs(x - target);
    if (diff > max_residual) max_residual = diff;
    return diff <= tol * std::max(1.0, std::abs(target));
}

CharacterizationReport verify_characterization(const MatD& m, double tol) {
    const int n = m.n;
    double s = 0, q = 0;
    for (double v : m.a) {
        s += v;
        q += v * v;
    }
    const double alpha = s / n;
    const double beta = q / n;
    const double delta = (alpha * alpha - beta) / (n - 1);

    CharacterizationReport rep;
    rep.delta = delta;
    rep.rowsum_ok = rep.colsum_ok = rep.gram_ok = rep.det_ok = true;
    rep.max_residual = 0.0;

    const double eq_margin = tol * std::max(1.0, std::abs(beta));
    const bool low = alpha * alpha <= beta + eq_margin;   // conditions (A)/(B)
    const bool high = alpha * alpha >= beta - eq_margin;  // conditions (C)/(D)/(E)

    MatD g(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double dot = 0;
            for (int j = 0; j < n; ++j) dot += m(i, j) * m(k, j);
            g(i, k) = dot;
        }
    const double det = det_float(m);

    if (low) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                rep.gram_ok &= close(g(i, k), i == k ? beta : 0.0, tol, rep.max_residual);
        rep.det_ok &= close(std::abs(det), std::pow(beta, n / 2.0), tol, rep.max_residual);
    }
    if (high) {
        for (int i = 0; i < n; ++i) {
            double rs = 0, cs = 0;
            for (int j = 0; j < n; ++j) {
                rs += m(i, j);
                cs += m(j, i);
            }
            rep.rowsum_ok &= close(rs, alpha, tol, rep.max_residual);
            rep.colsum_ok &= close(cs, alpha, tol, rep.max_residual);
        }
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                rep.gram_ok &= close(g(i, k), i == k ? beta : delta, tol, rep.max_residual);
        // beta - delta = (n*beta - alpha^2)/(n-1) >= 0; rounding can push it
        // slightly negative at the boundary, which would NaN the pow.
        const double bd = std::max(0.0, beta - delta);
        rep.det_ok &= close(std::abs(det), std::abs(alpha) * std::pow(bd, (n - 1) / 2.0), tol,
                            rep.max_residual);
    }
    return rep;
}

CharacterizationReport verify_characterization(const Matrix& m, double tol) {
    return verify_characterization(m.to_double(), tol);
}

}  // namespace gasper
