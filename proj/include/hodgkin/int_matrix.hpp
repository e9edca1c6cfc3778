#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hodgkin/integer.hpp"

namespace hodgkin {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix over a scalar type (Integer or Checked64).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<long>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw PreconditionError("ragged matrix literal");
            for (long v : row)
                data_.push_back(T(v));
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

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T* row(std::size_t i) { return data_.data() + i * cols_; }
    const T* row(std::size_t i) const { return data_.data() + i * cols_; }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!hodgkin::is_zero(x))
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

template <class T>
Matrix<T> transpose(const Matrix<T>& a)
{
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

/// Converts to the checked fast-path scalar; throws Overflow if an entry does not fit.
Matrix<Checked64> to_checked(const IntMatrix& a);
IntMatrix to_integer(const Matrix<Checked64>& a);
inline IntMatrix to_integer(const IntMatrix& a) { return a; }

/// Product with an int64 fast path; falls back to Integer arithmetic on overflow.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix scaled(const IntMatrix& a, const Integer& s);

/// Exact determinant (multi-modular, Hadamard-bounded).
Integer determinant(const IntMatrix& a);

/// Bareiss fraction-free determinant; slower, kept as an independent route.
Integer determinant_bareiss(const IntMatrix& a);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& a);

/// a^k for k >= 0.
IntMatrix power(const IntMatrix& a, unsigned k);

bool is_zero_vector(const IntVector& v);

std::string to_string(const IntMatrix& a);
std::string to_string(const IntVector& v);

}  // namespace hodgkin
