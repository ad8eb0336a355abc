#include "cubezero/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubezero {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j].field() != f) throw std::invalid_argument("entry field mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_int_rows(const Field& f,
                             std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged rows");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Scalar::from_int(f, v);
        ++i;
    }
    return m;
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[i * cols_ + j];
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[i * cols_ + j];
}

Vec Matrix::row(std::size_t i) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("matrix field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
    Vec y = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
        Scalar inv = a.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a.at(i, col).is_zero()) continue;
            Scalar factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= factor * a.at(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

namespace {

// Bareiss on an integral matrix (entries integers, possibly as mpq with
// denominator 1, or GF(p) elements where every division is exact anyway).
Scalar det_bareiss(Matrix a) {
    const Field f = a.field();
    std::size_t n = a.rows();
    if (n == 0) return Scalar::one(f);
    Scalar sign = Scalar::one(f);
    Scalar prev = Scalar::one(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t sel = k;
        while (sel < n && a.at(sel, k).is_zero()) ++sel;
        if (sel == n) return Scalar::zero(f);
        if (sel != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

}  // namespace

Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.field().is_finite()) return det_bareiss(m);

    // Scale each row to integers so the Bareiss divisions stay in Z.
    Matrix a = m;
    mpq_class scaling = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    a.at(i, j).rational_value().get_den().get_mpz_t());
        if (l != 1) {
            Scalar c = Scalar::rational(mpq_class(l));
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) *= c;
            scaling *= l;
        }
    }
    Scalar d = det_bareiss(std::move(a));
    return Scalar::rational(mpq_class(d.rational_value() / scaling));
}

bool solve_row_combination(const Matrix& m, const Vec& target, Vec& coeffs_out) {
    if (target.size() != m.cols()) throw std::invalid_argument("vector length mismatch");
    // Reduce [m^T | target^T]; consistent iff no pivot lands in the last column.
    Matrix aug(m.field(), m.cols(), m.rows() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(j, i) = m.at(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(j, m.rows()) = target[j];
    RrefResult r = rref(aug);
    coeffs_out = zero_vec(m.field(), m.rows());
    for (std::size_t row = 0; row < r.rank; ++row) {
        std::size_t p = r.pivot_cols[row];
        if (p == m.rows()) return false;  // pivot in augmented column
        coeffs_out[p] = r.reduced.at(row, m.rows());
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

}  // namespace cubezero
