#include "gasper/core.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace gasper {

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::AlphaSqLtBeta: return "ALPHA_SQ_LT_BETA";
        case CaseTag::AlphaSqEqBeta: return "ALPHA_SQ_EQ_BETA";
        case CaseTag::AlphaSqGtBeta: return "ALPHA_SQ_GT_BETA";
    }
    return "?";
}

static EntryStats stats_from_sums(int n, Rat s, Rat q) {
    EntryStats st;
    st.n = n;
    st.s = std::move(s);
    st.q = std::move(q);
    st.alpha = st.s / n;
    st.beta = st.q / n;
    st.kappa = (n * st.beta - st.alpha * st.alpha) / (n - 1);
    Rat a2 = st.alpha * st.alpha;
    int c = cmp(a2, st.beta);
    st.case_tag = c < 0   ? CaseTag::AlphaSqLtBeta
                  : c > 0 ? CaseTag::AlphaSqGtBeta
                          : CaseTag::AlphaSqEqBeta;
    return st;
}

EntryStats entry_stats(const Matrix& m) {
    Rat s = 0, q = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            s += m(i, j);
            q += m(i, j) * m(i, j);
        }
    return stats_from_sums(m.dim(), std::move(s), std::move(q));
}

EntryStats multiset_stats(int n, const std::vector<Rat>& entries) {
    if (static_cast<size_t>(n) * n != entries.size())
        throw DimensionMismatch("multiset has " + std::to_string(entries.size()) +
                                " entries, expected " + std::to_string(n * n));
    Rat s = 0, q = 0;
    for (const Rat& v : entries) {
        s += v;
        q += v * v;
    }
    return stats_from_sums(n, std::move(s), std::move(q));
}

Rat det_exact(const Matrix& m) {
    const int n = m.dim();

    // Clear denominators once: det(M) = det(D*M) / D^n.
    mpz_class den(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den().get_mpz_t());

    std::vector<mpz_class> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] = m(i, j).get_num() * (den / m(i, j).get_den());

    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * n + j]; };

    // Bareiss fraction-free elimination; all divisions are exact.
    int sign = 1;
    mpz_class prev(1);
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = at(k, k);
    }

    mpz_class det_int = at(n - 1, n - 1) * sign;
    mpz_class den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
    Rat d(det_int, den_pow);
    d.canonicalize();
    return d;
}

double det_float(const MatD& m) {
    const int n = m.n;
    if (n == 0) return 1.0;
    MatD a = m;
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
        if (a(pivot, k) == 0.0) return 0.0;
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            double f = a(i, k) / a(k, k);
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

double det_float(const Matrix& m) { return det_float(m.to_double()); }

Rat shifted_identity_det(const Rat& x, const Rat& y, int n) {
    if (n < 2) throw DimensionMismatch("dimension must be >= 2");
    Rat xp(1);
    for (int i = 0; i < n - 1; ++i) xp *= x;
    return xp * (x + n * y);
}

Matrix shifted_identity_inverse(const Rat& x, const Rat& y, int n) {
    if (n < 2) throw DimensionMismatch("dimension must be >= 2");
    if (x == 0 || x == -n * y)
        throw SingularShiftedIdentity("xI + yJ is singular for x = " + format_rational(x) +
                                      ", y = " + format_rational(y) + ", n = " + std::to_string(n));
    Rat off = -y / (x * (x + n * y));
    Rat diag = Rat(1) / x + off;
    return Matrix::shifted(diag - off, off, n);
}

}  // namespace gasper
