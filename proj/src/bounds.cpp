#include "gasper/bounds.hpp"

#include <cmath>

namespace gasper {

const char* formula_tag_name(FormulaTag tag) {
    return tag == FormulaTag::BetaPower ? "BETA_POWER" : "ALPHA_KAPPA";
}

BoundReport gasper_bound(const EntryStats& st) {
    BoundReport r;
    r.stats = st;
    const int n = st.n;
    const double beta = to_double(st.beta);
    r.beta_power = std::pow(beta, n / 2.0);
    r.feasible = st.alpha * st.alpha <= n * st.beta;
    if (st.case_tag == CaseTag::AlphaSqLtBeta) {
        r.formula = FormulaTag::BetaPower;
        r.bound = r.beta_power;
    } else {
        r.formula = FormulaTag::AlphaKappa;
        r.bound = std::abs(to_double(st.alpha)) * std::pow(to_double(st.kappa), (n - 1) / 2.0);
    }
    return r;
}

BoundReport gasper_bound(const Matrix& m) { return gasper_bound(entry_stats(m)); }

// One orientation of the complex-entry bound: alpha from the real part, beta from
// both parts, kappa with the 2n denominator.
static double complex_orientation(const Matrix& re, const Matrix& im, Rat* alpha_out, Rat* beta_out,
                                  Rat* kappa_out) {
    const int n = re.dim();
    Rat s = 0, q = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s += re(i, j);
            q += re(i, j) * re(i, j) + im(i, j) * im(i, j);
        }
    Rat alpha = s / n;
    Rat beta = q / n;
    Rat kappa = (2 * n * beta - alpha * alpha) / (2 * n - 1);
    if (alpha_out) *alpha_out = alpha;
    if (beta_out) *beta_out = beta;
    if (kappa_out) *kappa_out = kappa;
    if (alpha * alpha < beta) return std::pow(to_double(beta), n / 2.0);
    return std::sqrt(std::abs(to_double(alpha))) * std::pow(to_double(kappa), (2 * n - 1) / 4.0);
}

ComplexBoundReport complex_bound(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("real and imaginary parts have dimensions " +
                                std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    ComplexBoundReport r;
    r.bound_direct = complex_orientation(a, b, &r.alpha, &r.beta, &r.kappa);
    r.bound_swapped = complex_orientation(b, a, nullptr, nullptr, nullptr);
    r.bound = std::min(r.bound_direct, r.bound_swapped);
    return r;
}

double hadamard_row_bound(const Matrix& m) {
    double prod = 1.0;
    for (int i = 0; i < m.dim(); ++i) {
        Rat rq = 0;
        for (int j = 0; j < m.dim(); ++j) rq += m(i, j) * m(i, j);
        prod *= std::sqrt(to_double(rq));
    }
    return prod;
}

ExcessCheck best_excess_check(const Matrix& m) {
    const int n = m.dim();
    Rat s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m(i, j) != 1 && m(i, j) != -1)
                throw NotSignMatrix("entry at (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is " + format_rational(m(i, j)) + ", not in {-1, 1}");
            s += m(i, j);
        }
    bool hadamard = true;
    for (int i = 0; i < n && hadamard; ++i)
        for (int k = 0; k < n && hadamard; ++k) {
            Rat dot = 0;
            for (int j = 0; j < n; ++j) dot += m(i, j) * m(k, j);
            if (dot != (i == k ? Rat(n) : Rat(0))) hadamard = false;
        }
    return {hadamard, s, std::pow(static_cast<double>(n), 1.5)};
}

double ryser_bound(const RyserInput& input) {
    const int n = input.n;
    const double k = static_cast<double>(input.t) / n;
    if (input.t < n) return std::pow(k, n / 2.0);
    if (input.t == n) return 1.0;
    return std::pow(k, (n + 1) / 2.0) * std::pow((n - k) / (n - 1), (n - 1) / 2.0);
}

double brent_bound(const BrentInput& input) {
    const int n = input.n;
    const double e = input.epsilon;
    if (input.zero_diagonal) return std::pow(1.0 + (n - 1) * e * e, n / 2.0);
    return std::pow(1.0 + 2.0 * e + n * e * e, n / 2.0);
}

TraceDetCheck trace_det_check(const Matrix& m) {
    EntryStats st = entry_stats(m);
    double det = to_double(det_exact(m));
    TraceDetCheck c;
    c.lhs = det * det;
    c.rhs = std::pow(to_double(st.beta), st.n);
    c.holds = c.lhs <= c.rhs * (1.0 + 1e-12);
    return c;
}

ProgressionBound progression_bound(int n, const Rat& p, const Rat& q, ProgressionMode mode) {
    if (q <= 0) throw NonpositiveStep("progression step q must be positive, got " + format_rational(q));
    if (n < 2) throw DimensionMismatch("dimension must be >= 2");
    ProgressionBound b;
    b.n = n;
    b.p = p;
    b.q = q;
    Rat nn(n);
    if (mode == ProgressionMode::FullSquare) {
        b.r = p / q + make_rat(n * n - 1, 2);
        b.rho = make_rat(n * n * n + n * n + n + 1, 12);
        b.sigma = nn * q * q * (b.r * b.r + make_rat(static_cast<long>(n) * n * n * n - 1, 12));
    } else {
        b.r = p / q + make_rat(n - 1, 2);
        b.rho = make_rat(n + 1, 12);
        b.sigma = nn * q * q * (b.r * b.r + make_rat(n * n - 1, 12));
    }
    if (b.r * b.r < b.rho) {
        b.bound = std::pow(to_double(b.sigma), n / 2.0);
    } else {
        b.bound = std::pow(static_cast<double>(n), n) * std::pow(to_double(q), n) *
                  std::abs(to_double(b.r)) * std::pow(to_double(b.rho), (n - 1) / 2.0);
    }
    return b;
}

RelateGap relate_gap(const Rat& alpha, const Rat& beta, int n) {
    if (beta <= 0) throw InfeasiblePair("beta must be positive, got " + format_rational(beta));
    Rat a2 = alpha * alpha;
    if (a2 > n * beta)
        throw InfeasiblePair("alpha^2 = " + format_rational(a2) + " exceeds n*beta = " +
                             format_rational(n * beta));
    RelateGap g;
    Rat kappa = (n * beta - a2) / (n - 1);
    g.lhs = std::abs(to_double(alpha)) * std::pow(to_double(kappa), (n - 1) / 2.0);
    g.rhs = std::pow(to_double(beta), n / 2.0);
    g.equal = (a2 == beta);
    return g;
}

}  // namespace gasper
