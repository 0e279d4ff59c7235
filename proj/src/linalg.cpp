#include "etale/linalg.hpp"

#include <utility>

#include "etale/error.hpp"

namespace etale {

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

RowEchelon row_reduce(const Field& field, Matrix m) {
    RowEchelon out;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && field.is_zero(m(r, c))) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot_row, k));
        Scalar inv = field.invert(m(pivot_row, c));
        for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) = field.mul(m(pivot_row, k), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || field.is_zero(m(i, c))) continue;
            Scalar factor = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m(i, k) = field.sub(m(i, k), field.mul(factor, m(pivot_row, k)));
        }
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Field& field, const Matrix& m) { return row_reduce(field, m).pivot_columns.size(); }

Scalar determinant(const Field& field, Matrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Scalar det = field.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && field.is_zero(m(r, c))) ++r;
        if (r == n) return field.zero();
        if (r != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(r, k), m(c, k));
            det = field.neg(det);
        }
        det = field.mul(det, m(c, c));
        Scalar inv = field.invert(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (field.is_zero(m(i, c))) continue;
            Scalar factor = field.mul(m(i, c), inv);
            for (std::size_t k = c; k < n; ++k) m(i, k) = field.sub(m(i, k), field.mul(factor, m(c, k)));
        }
    }
    return det;
}

std::vector<Vector> nullspace(const Field& field, const Matrix& m) {
    RowEchelon ech = row_reduce(field, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i)
            v[ech.pivot_columns[i]] = field.neg(ech.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Field& field, const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    RowEchelon ech = row_reduce(field, std::move(aug));
    if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), field.zero());
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) x[ech.pivot_columns[i]] = ech.reduced(i, m.cols());
    return x;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (field.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
        }
    return out;
}

Vector apply(const Field& field, const Matrix& m, const Vector& v) {
    if (m.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shapes");
    Vector out(m.rows(), field.zero());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (field.is_zero(v[c])) continue;
        for (std::size_t r = 0; r < m.rows(); ++r) out[r] = field.add(out[r], field.mul(m(r, c), v[c]));
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

Vector add(const Field& field, const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
    return out;
}

Vector sub(const Field& field, const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
    return out;
}

Vector scale(const Field& field, const Scalar& c, const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.mul(c, v[i]);
    return out;
}

bool is_zero(const Field& field, const Vector& v) {
    for (const auto& x : v)
        if (!field.is_zero(x)) return false;
    return true;
}

}  // namespace etale
