#pragma once

// Dense exact matrices over Z and Q. Sizes here never exceed a few dozen,
// so everything is plain row-major storage and cubic algorithms.

#include <cstddef>
#include <string>
#include <vector>

#include "csm/arith.hpp"

namespace csm {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t k) {
        Matrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += x(i, k) * y(k, j);
            }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Fraction-free Gaussian elimination.
Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

/// Throws invalid_argument when singular.
RatMatrix inverse(const RatMatrix& a);

RatMatrix to_rational(const IntMatrix& a);

/// H = A * U with U unimodular and H in column echelon form: the first `rank`
/// columns are lower-staircase with positive pivots and reduced entries to the
/// left of each pivot, the remaining columns are zero.
struct ColumnHnf {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
};
ColumnHnf column_hnf(const IntMatrix& a);

/// Columns form a Z-basis of {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Square matrix whose columns span the same lattice as the columns of `a`;
/// throws rank_mismatch if the span is not full rank.
IntMatrix lattice_basis(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

}  // namespace csm
