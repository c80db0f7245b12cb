#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spinfactor/scalar.hpp"

namespace spinfactor {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix operator*(const Matrix& other) const;
    Vector operator*(const Vector& v) const;
    Matrix operator-(const Matrix& other) const;
    Matrix transpose() const;
    bool is_zero() const;
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form together with the data produced on the way.
struct Echelon {
    Matrix rref;                       // nonzero rows only, pivots normalised to 1
    std::vector<std::size_t> pivots;   // pivot column of each row
    std::vector<Scalar> pivot_values;  // fraction-free pivots met during elimination
};

/// Fraction-free (Bareiss) forward elimination followed by back substitution.
/// Throws NonInvertibleError when every candidate pivot in a column is a
/// non-unit of the coefficient ring.
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Kernel basis (right null space), one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
/// Determinant of a square matrix by Bareiss elimination.
Scalar determinant(const Matrix& m);

/// Subspace of Scalar^dim in canonical RREF form.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;
    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
bool is_zero(const Vector& v);

}  // namespace spinfactor
