#include "gasper/matrix.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gasper {

Rat parse_rational(const std::string& token) {
    std::string s;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational token");
    if (s.front() == '+') s.erase(s.begin());

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw ParseError("mixed decimal and fraction: '" + token + "'");
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-") throw ParseError("bad decimal: '" + token + "'");
        try {
            mpz_class num(digits, 10);
            mpz_class den(1);
            for (size_t i = 0; i < frac_len; ++i) den *= 10;
            Rat v(num, den);
            v.canonicalize();
            return v;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad decimal: '" + token + "'");
        }
    }

    try {
        Rat v(s, 10);
        if (v.get_den() == 0) throw ParseError("zero denominator: '" + token + "'");
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: '" + token + "'");
    }
}

std::string format_rational(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool rational_sqrt(const Rat& v, Rat& root) {
    if (v < 0) return false;
    mpz_class num = v.get_num(), den = v.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rat(rn, rd);
    root.canonicalize();
    return true;
}

Matrix::Matrix(int n) : n_(n), a_(n >= 2 ? static_cast<size_t>(n) * n : 0) {
    if (n < 2) throw DimensionMismatch("matrix dimension must be >= 2, got " + std::to_string(n));
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::ones(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 1;
    return m;
}

Matrix Matrix::shifted(const Rat& x, const Rat& y, int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? x + y : y;
    return m;
}

MatD Matrix::to_double() const {
    MatD d(n_);
    for (size_t k = 0; k < a_.size(); ++k) d.a[k] = a_[k].get_d();
    return d;
}

Matrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        std::vector<Rat> row;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) row.push_back(parse_rational(tok));
        rows.push_back(std::move(row));
    }
    if (rows.size() < 2) throw ParseError("matrix must have at least 2 rows");
    size_t n = rows.size();
    for (const auto& row : rows)
        if (row.size() != n)
            throw ParseError("matrix is not square: " + std::to_string(n) + " rows but a row has " +
                             std::to_string(row.size()) + " entries");
    Matrix m(static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open matrix file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_matrix(ss.str());
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out += ",";
            out += format_rational(m(i, j));
        }
        out += "\n";
    }
    return out;
}

std::string format_matrix(const MatD& m) {
    std::ostringstream out;
    out.precision(17);
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            if (j) out << ",";
            out << m(i, j);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace gasper
