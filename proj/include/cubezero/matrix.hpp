#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubezero/scalar.hpp"

namespace cubezero {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

// Dense row-major matrix; all entries share the field. Zero rows/columns are
// allowed (they arise from dim-0 spaces).
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
    // Rational-field convenience for tests and small literals.
    static Matrix from_int_rows(const Field& f,
                                std::initializer_list<std::initializer_list<long>> rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j);
    const Scalar& at(std::size_t i, std::size_t j) const;
    Vec row(std::size_t i) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& x) const;  // matrix * column vector

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
};

// Reduced row echelon form with deterministic pivoting: leftmost nonzero
// column, first nonzero row.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Exact determinant by fraction-free Bareiss elimination (rows are scaled to
// integers first over Q, so intermediate values stay integral).
// Throws std::invalid_argument on non-square input.
Scalar det(const Matrix& m);

// Solves y * m = target for a row vector y, if target lies in the row space.
bool solve_row_combination(const Matrix& m, const Vec& target, Vec& coeffs_out);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace cubezero
