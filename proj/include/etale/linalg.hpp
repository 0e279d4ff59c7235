#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "etale/field.hpp"

namespace etale {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of field elements. Arithmetic goes through the owning Field.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(const Field& field, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon row_reduce(const Field& field, Matrix m);
std::size_t rank(const Field& field, const Matrix& m);
Scalar determinant(const Field& field, Matrix m);
/// Basis of {v : m v = 0}, one vector per free column, in increasing column order.
std::vector<Vector> nullspace(const Field& field, const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Field& field, const Matrix& m, const Vector& b);

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
Vector apply(const Field& field, const Matrix& m, const Vector& v);
Matrix transpose(const Matrix& m);

Vector add(const Field& field, const Vector& a, const Vector& b);
Vector sub(const Field& field, const Vector& a, const Vector& b);
Vector scale(const Field& field, const Scalar& c, const Vector& v);
bool is_zero(const Field& field, const Vector& v);

}  // namespace etale
