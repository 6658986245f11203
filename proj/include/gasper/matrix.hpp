#pragma once

#include <string>
#include <vector>

#include "gasper/errors.hpp"
#include "gasper/rational.hpp"

namespace gasper {

// Dense double matrix. No dimension restriction; used for constructions
// with irrational entries and for infinite-determinant truncations.
struct MatD {
    int n = 0;
    std::vector<double> a;

    MatD() = default;
    explicit MatD(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Dense square matrix with exact rational entries, n >= 2.
class Matrix {
public:
    explicit Matrix(int n);

    static Matrix identity(int n);
    static Matrix ones(int n);                                // J
    static Matrix shifted(const Rat& x, const Rat& y, int n); // xI + yJ

    int dim() const { return n_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const Matrix& other) const { return n_ == other.n_ && a_ == other.a_; }

    MatD to_double() const;

private:
    int n_;
    std::vector<Rat> a_;
};

// Text format: one row per line, comma-separated entries; each entry an
// integer, a decimal, or "p/q".
Matrix parse_matrix(const std::string& text);
Matrix read_matrix_file(const std::string& path);
std::string format_matrix(const Matrix& m);
std::string format_matrix(const MatD& m);

}  // namespace gasper
