#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gasper/core.hpp"
#include "oracle.hpp"

using namespace gasper;

static Matrix mat2(int a, int b, int c, int d) {
    Matrix m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

TEST_CASE("matrix construction rejects n < 2") {
    CHECK_THROWS_AS(Matrix(1), DimensionMismatch);
    CHECK_THROWS_AS(Matrix(0), DimensionMismatch);
}

TEST_CASE("matrix text format round-trips exactly") {
    Matrix m(3);
    m(0, 0) = parse_rational("1/3");
    m(0, 1) = parse_rational("-2");
    m(0, 2) = parse_rational("0.25");
    m(1, 1) = parse_rational("7/2");
    m(2, 0) = parse_rational("-1/6");
    m(2, 2) = 5;
    Matrix back = parse_matrix(format_matrix(m));
    CHECK(back == m);
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(parse_rational("-1.5") == Rat(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1,2\n3"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1,2"), ParseError);
}

TEST_CASE("entry_stats on small worked examples") {
    EntryStats st = entry_stats(mat2(1, 2, 2, 3));
    CHECK(st.s == 8);
    CHECK(st.q == 18);
    CHECK(st.alpha == 4);
    CHECK(st.beta == 9);
    CHECK(st.case_tag == CaseTag::AlphaSqGtBeta);

    EntryStats z = entry_stats(mat2(0, 0, 0, 0));
    CHECK(z.s == 0);
    CHECK(z.q == 0);
    CHECK(z.alpha == 0);
    CHECK(z.beta == 0);
    CHECK(z.case_tag == CaseTag::AlphaSqEqBeta);

    EntryStats id = entry_stats(Matrix::identity(2));
    CHECK(id.alpha == 1);
    CHECK(id.beta == 1);
    CHECK(id.case_tag == CaseTag::AlphaSqEqBeta);
}

TEST_CASE("entry_stats invariant under row/col permutation and transpose") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 5));
        Matrix m = oracle::random_int_matrix(rng, n, -9, 9);
        EntryStats st = entry_stats(m);

        Matrix t(n), rowswap = m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t(i, j) = m(j, i);
        for (int j = 0; j < n; ++j) std::swap(rowswap(0, j), rowswap(n - 1, j));

        for (const Matrix* v : {&t, &rowswap}) {
            EntryStats st2 = entry_stats(*v);
            CHECK(st2.s == st.s);
            CHECK(st2.q == st.q);
            CHECK(st2.kappa == st.kappa);
        }
    }
}

TEST_CASE("det_exact basics") {
    CHECK(det_exact(mat2(3, 1, 2, 4)) == 10);
    CHECK(det_exact(Matrix::identity(5)) == 1);
    Matrix dup(3);
    for (int j = 0; j < 3; ++j) {
        dup(0, j) = j + 1;
        dup(1, j) = j + 1;
        dup(2, j) = 7 - j;
    }
    CHECK(det_exact(dup) == 0);
}

TEST_CASE("det_exact matches permutation-expansion oracle") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 5));
        Matrix m = oracle::random_int_matrix(rng, n, -9, 9);
        CHECK(det_exact(m) == oracle::det_permutation(m));
    }
    // rational entries
    Matrix r(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = make_rat(rng.uniform(-9, 9), rng.uniform(1, 7));
    CHECK(det_exact(r) == oracle::det_permutation(r));
}

TEST_CASE("det_exact sign under row swap, invariant under transpose") {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 5));
        Matrix m = oracle::random_int_matrix(rng, n, -9, 9);
        Rat d = det_exact(m);
        Matrix sw = m, t(n);
        for (int j = 0; j < n; ++j) std::swap(sw(0, j), sw(1, j));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t(i, j) = m(j, i);
        CHECK(det_exact(sw) == -d);
        CHECK(det_exact(t) == d);
    }
}

TEST_CASE("det_float agrees with det_exact within 1e-9 relative") {
    CHECK(det_float(mat2(3, 1, 2, 4)) == doctest::Approx(10).epsilon(1e-9));
    CHECK(det_float(Matrix::identity(8)) == doctest::Approx(1.0));
    CHECK(det_float(mat2(0, 1, -1, 0)) == doctest::Approx(1.0));

    oracle::Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 6));
        Matrix m = oracle::random_int_matrix(rng, n, -9, 9);
        double ex = to_double(det_exact(m));
        double fl = det_float(m);
        CHECK(std::abs(fl - ex) <= 1e-9 * std::max(1.0, std::abs(ex)));
    }
}

TEST_CASE("shifted identity determinant closed form") {
    CHECK(shifted_identity_det(1, 1, 2) == 3);
    CHECK(shifted_identity_det(2, -1, 3) == -4);
    CHECK(shifted_identity_det(0, 5, 4) == 0);

    oracle::Rng rng(19);
    for (int trial = 0; trial < 500; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 8));
        Rat x = make_rat(rng.uniform(-9, 9), rng.uniform(1, 10));
        Rat y = make_rat(rng.uniform(-9, 9), rng.uniform(1, 10));
        CHECK(shifted_identity_det(x, y, n) == det_exact(Matrix::shifted(x, y, n)));
    }
}

TEST_CASE("shifted identity inverse") {
    Matrix inv = shifted_identity_inverse(1, 1, 2);
    CHECK(inv(0, 0) == Rat(2, 3));
    CHECK(inv(0, 1) == Rat(-1, 3));
    CHECK(shifted_identity_inverse(1, 0, 3) == Matrix::identity(3));
    CHECK_THROWS_AS(shifted_identity_inverse(1, Rat(-1, 2), 2), SingularShiftedIdentity);
    CHECK_THROWS_AS(shifted_identity_inverse(0, 1, 3), SingularShiftedIdentity);

    oracle::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 8));
        Rat x = make_rat(rng.uniform(-9, 9), rng.uniform(1, 10));
        Rat y = make_rat(rng.uniform(-9, 9), rng.uniform(1, 10));
        if (x == 0 || x == -n * y) continue;
        Matrix m = Matrix::shifted(x, y, n);
        Matrix mi = shifted_identity_inverse(x, y, n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                Rat dot = 0;
                for (int k = 0; k < n; ++k) dot += m(i, k) * mi(k, j);
                ok = (dot == (i == j ? 1 : 0));
            }
        CHECK(ok);
    }
}
