#pragma once

#include "hmfcert/arith.hpp"
#include "hmfcert/error.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hmfcert::linalg {

/* Dense row-major matrix. */
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T const& fill = T(0))
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    Matrix(std::vector<std::vector<T>> const& rows)
    {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows.front().size();
        a_.reserve(rows_ * cols_);
        for (auto const& r : rows) {
            if (r.size() != cols_)
                raise(ErrorCode::InvalidArgument, "ragged matrix rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    T const& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<std::vector<T>> to_rows() const
    {
        std::vector<std::vector<T>> r;
        for (std::size_t i = 0; i < rows_; ++i)
            r.push_back(row(i));
        return r;
    }
    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, i), (*this)(r, j));
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /* rows [r0, r1) and columns [c0, c1) */
    Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const
    {
        Matrix b(r1 - r0, c1 - c0);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j)
                b(i - r0, j - c0) = (*this)(i, j);
        return b;
    }

    bool operator==(Matrix const& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    friend Matrix operator*(Matrix const& x, Matrix const& y)
    {
        if (x.cols_ != y.rows_)
            raise(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(Matrix const& x, Matrix const& y)
    {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i)
            r.a_[i] += y.a_[i];
        return r;
    }
    friend Matrix operator-(Matrix const& x, Matrix const& y)
    {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i)
            r.a_[i] -= y.a_[i];
        return r;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(IntMatrix const& m);
/* m * den, den the lcm of all denominators of m */
IntMatrix clear_denominators(RatMatrix const& m, Int& den);

/* Fraction-free (Bareiss) determinant. */
Int det_bareiss(IntMatrix m);
Rat det(RatMatrix const& m);

std::size_t rank(RatMatrix m);
RatMatrix inverse(RatMatrix const& m);
/* basis (as rows) of { x : x * m = 0 } over Q */
RatMatrix left_null_space(RatMatrix const& m);
/* basis (as rows) of { x : m * x = 0 } over Q */
RatMatrix right_null_space(RatMatrix const& m);
/* rows spanning the same Q-space, in reduced echelon form without zero rows */
RatMatrix row_echelon(RatMatrix m);

struct HnfResult {
    IntMatrix h;  // U * A, nonzero rows first
    IntMatrix u;  // unimodular
    std::size_t rank = 0;
};

/* Row-style Hermite normal form: upper echelon, positive pivots, entries
 * above each pivot reduced into [0, pivot). */
HnfResult hnf_with_transform(IntMatrix const& a);
/* nonzero rows of the HNF */
IntMatrix hnf(IntMatrix const& a);

/* Smith invariant factors d1 | d2 | ... (nonzero ones only, length = rank) */
std::vector<Int> snf(IntMatrix const& a);

/* Saturated integer basis (as rows) of { x in Z^r : x * A = 0 }. */
IntMatrix integer_left_kernel(IntMatrix const& a);

std::string to_string(IntMatrix const& m);

} // namespace hmfcert::linalg
