#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liekit/rational.hpp"

namespace liekit {

// Dense row-major matrix. Small-dimensional work only (Cartan matrices, ad operators,
// module actions); large sparse systems go through SparseEchelon.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    Matrix scaled(const T& s) const
    {
        Matrix m = *this;
        for (auto& x : m.data_)
            x *= s;
        return m;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using IMatrix = Matrix<int64_t>;

QMatrix to_qmatrix(const IMatrix& m);

Rational determinant(QMatrix m);
std::size_t rank(const QMatrix& m);
// Throws DimensionMismatch when singular or non-square.
QMatrix inverse(const QMatrix& m);
// Basis of {x : m x = 0}.
std::vector<QVec> nullspace(const QMatrix& m);
// Some x with m x = b, or nullopt.
std::optional<QVec> solve(const QMatrix& m, const QVec& b);

// Leading principal minors all positive (Sylvester), exact.
bool is_positive_definite(const QMatrix& symmetric);

// Diagonal of the Smith normal form (nonnegative, each divides the next).
std::vector<Integer> smith_diagonal(const IMatrix& m);

// Sparse integer row: sorted (column, value) pairs, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

// Incremental row echelon form over Q, kept fraction-free: every stored row is an
// integer row with content 1 and positive leading entry. Rank is exact.
class SparseEchelon {
public:
    // Clears denominators, reduces against the stored pivots and stores the remainder
    // if nonzero. Returns true when the row was independent.
    bool insert(const std::vector<std::pair<std::size_t, Rational>>& row);
    bool insert_integer(SparseRow row);

    // True if the row lies in the span of the inserted rows.
    bool contains(const std::vector<std::pair<std::size_t, Rational>>& row) const;

    std::size_t rank() const { return pivots_.size(); }

    // Pivot rows, ordered by leading column.
    std::vector<SparseRow> basis() const;

private:
    SparseRow reduce(SparseRow row) const;

    std::map<std::size_t, SparseRow> pivots_;
};

SparseRow to_integer_row(const std::vector<std::pair<std::size_t, Rational>>& row);

} // namespace liekit
