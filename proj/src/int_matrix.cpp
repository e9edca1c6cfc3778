#include "hodgkin/int_matrix.hpp"

#include "hodgkin/modular.hpp"

#include <sstream>
#include <utility>

namespace hodgkin {

Matrix<Checked64> to_checked(const IntMatrix& a)
{
    Matrix<Checked64> r(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k)
        r.data()[k] = to_scalar<Checked64>(a.data()[k]);
    return r;
}

IntMatrix to_integer(const Matrix<Checked64>& a)
{
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k)
        r.data()[k] = Integer(a.data()[k].value());
    return r;
}

namespace {

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        T* ci = c.row(i);
        const T* ai = a.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(ai[k]))
                continue;
            const T& aik = ai[k];
            const T* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!is_zero(bk[j]))
                    ci[j] += aik * bk[j];
        }
    }
    return c;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw PreconditionError("matrix product: dimension mismatch");
    try {
        return to_integer(multiply(to_checked(a), to_checked(b)));
    } catch (const Overflow&) {
        return multiply(a, b);
    }
}

IntVector operator*(const IntMatrix& a, const IntVector& x)
{
    if (a.cols() != x.size())
        throw PreconditionError("matrix-vector product: dimension mismatch");
    IntVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Integer* ai = a.row(i);
        Integer acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!ai[j].is_zero() && !x[j].is_zero())
                acc += ai[j] * x[j];
        y[i] = std::move(acc);
    }
    return y;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix sum: dimension mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data().size(); ++k)
        c.data()[k] += b.data()[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix difference: dimension mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data().size(); ++k)
        c.data()[k] -= b.data()[k];
    return c;
}

IntMatrix scaled(const IntMatrix& a, const Integer& s)
{
    IntMatrix c = a;
    for (auto& x : c.data())
        x *= s;
    return c;
}

Integer determinant(const IntMatrix& a)
{
    return modular::determinant(a);
}

Integer determinant_bareiss(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw PreconditionError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero())
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a)
{
    IntMatrix m = a;
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(r, j), m(p, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

IntMatrix power(const IntMatrix& a, unsigned k)
{
    IntMatrix result = IntMatrix::identity(a.rows());
    IntMatrix base = a;
    while (k) {
        if (k & 1u)
            result = result * base;
        k >>= 1u;
        if (k)
            base = base * base;
    }
    return result;
}

bool is_zero_vector(const IntVector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

std::string to_string(const IntVector& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

std::string to_string(const IntMatrix& a)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < a.cols(); ++j)
            os << (j ? "," : "") << a(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace hodgkin
