#pragma once

// Dense matrices and exact linear algebra over Scalar fields.

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ncalg/error.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw size_mismatch("matrix product: inner dimensions differ");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero_value(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = s * v;
        return r;
    }
    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw size_mismatch("matrix-vector product: size mismatch");
        std::vector<T> r(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    T trace() const {
        if (!is_square()) throw size_mismatch("trace of a non-square matrix");
        T acc = zero_;
        for (std::size_t i = 0; i < rows_; ++i) acc = acc + (*this)(i, i);
        return acc;
    }
    bool is_zero() const {
        for (const auto& v : data_)
            if (!is_zero_value(v)) return false;
        return true;
    }

    /// Kronecker product; basis e_i (x) e_j has index i * b.rows() + j.
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const T& aij = a(i, j);
                if (is_zero_value(aij)) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l) r(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
            }
        return r;
    }

private:
    static bool is_zero_value(const T& v) {
        if constexpr (std::is_same_v<T, Scalar>)
            return v.is_zero();
        else
            return v == T{};
    }
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw size_mismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using ScalarVector = std::vector<Scalar>;

inline ScalarMatrix zeros(std::size_t r, std::size_t c, const Field& f) { return ScalarMatrix(r, c, f.zero()); }
inline ScalarMatrix identity(std::size_t n, const Field& f) { return ScalarMatrix::identity(n, f.zero(), f.one()); }

inline Field field_of(const ScalarMatrix& m) { return Field::of(m.zero()); }

/// Builds a matrix from rows of rationals (convenience for tests and presets).
inline ScalarMatrix matrix_from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& f) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    ScalarMatrix m = zeros(r, c, f);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw size_mismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.lift(rows[i][j]);
    }
    return m;
}

struct RowEchelon {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RowEchelon rref(ScalarMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Scalar inv = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const ScalarMatrix& m) { return rref(m).pivots.size(); }

/// Basis of the right null space {v : m v = 0}, one vector per free column.
inline std::vector<ScalarVector> nullspace(const ScalarMatrix& m) {
    const Field f = field_of(m);
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<ScalarVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ScalarVector v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solution set of A x = b: a particular solution plus a homogeneous basis.
struct AffineSolution {
    ScalarVector particular;
    std::vector<ScalarVector> homogeneous;
};

inline std::optional<AffineSolution> solve_affine(const ScalarMatrix& a, const ScalarVector& b) {
    if (b.size() != a.rows()) throw size_mismatch("solve: right-hand side length");
    const Field f = field_of(a);
    ScalarMatrix aug = zeros(a.rows(), a.cols() + 1, f);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    ScalarVector x(a.cols(), f.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return AffineSolution{std::move(x), nullspace(a)};
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Scalar determinant(ScalarMatrix m) {
    if (!m.is_square()) throw size_mismatch("determinant of a non-square matrix");
    const Field f = field_of(m);
    const std::size_t n = m.rows();
    if (n == 0) return f.one();
    Scalar prev = f.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return f.zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    Scalar d = m(n - 1, n - 1);
    return negate ? -d : d;
}

inline std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
    if (!m.is_square()) throw size_mismatch("inverse of a non-square matrix");
    const Field f = field_of(m);
    const std::size_t n = m.rows();
    ScalarMatrix aug = zeros(n, 2 * n, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    const RowEchelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    ScalarMatrix inv = zeros(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// Flattens row-major: entry (i, j) at index i * cols + j.
inline ScalarVector flatten(const ScalarMatrix& m) { return m.data(); }

inline ScalarMatrix unflatten(const ScalarVector& v, std::size_t rows, std::size_t cols, const Field& f) {
    if (v.size() != rows * cols) throw size_mismatch("unflatten: wrong length");
    ScalarMatrix m = zeros(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

/// Echelon basis of the span of the given vectors (all of equal length).
inline std::vector<ScalarVector> span_basis(const std::vector<ScalarVector>& vs, std::size_t dim, const Field& f) {
    if (vs.empty()) return {};
    ScalarMatrix m = zeros(vs.size(), dim, f);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
    const RowEchelon e = rref(m);
    std::vector<ScalarVector> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        ScalarVector row(dim, f.zero());
        for (std::size_t j = 0; j < dim; ++j) row[j] = e.reduced(r, j);
        out.push_back(std::move(row));
    }
    return out;
}

inline std::string to_string(const ScalarMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string_in_field(m(i, j));
        s += "]";
    }
    return s + "]";
}

}  // namespace ncalg
