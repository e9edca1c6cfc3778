#include "hodgkin/smith.hpp"

#include "hodgkin/modular.hpp"

#include <optional>
#include <vector>
#include <utility>

namespace hodgkin::homology {

namespace {

template <class T>
T magnitude(const T& x)
{
    return sign_of(x) < 0 ? T(-x) : x;
}

template <class T>
bool is_unit(const T& x)
{
    return x == T(1) || x == T(-1);
}

template <class T>
class SmithEngine {
public:
    SmithEngine(Matrix<T> a, const SmithOptions& opt) : a_(std::move(a))
    {
        if (opt.left)
            L_ = Matrix<T>::identity(a_.rows());
        if (opt.left_inverse)
            Li_ = Matrix<T>::identity(a_.rows());
        if (opt.right)
            R_ = Matrix<T>::identity(a_.cols());
        if (opt.right_inverse)
            Ri_ = Matrix<T>::identity(a_.cols());
    }

    SmithDecomposition run()
    {
        const std::size_t rows = a_.rows();
        const std::size_t cols = a_.cols();
        const std::size_t steps = std::min(rows, cols);
        std::size_t t = 0;
        for (; t < steps; ++t) {
            std::size_t pi = 0, pj = 0;
            if (!find_min_pivot(t, pi, pj))
                break;
            if (pi != t)
                row_swap(pi, t);
            if (pj != t)
                col_swap(pj, t);
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (is_zero(a_(i, t)))
                        continue;
                    T q = a_(i, t) / a_(t, t);
                    if (!is_zero(q))
                        row_sub(i, t, q);
                    if (!is_zero(a_(i, t)))
                        clean = false;
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (is_zero(a_(t, j)))
                        continue;
                    T q = a_(t, j) / a_(t, t);
                    if (!is_zero(q))
                        col_sub(j, t, q);
                    if (!is_zero(a_(t, j)))
                        clean = false;
                }
                if (!clean) {
                    move_line_min_to_pivot(t);
                    continue;
                }
                if (is_unit(a_(t, t)))
                    break;
                std::size_t bad = rows;
                for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (!is_zero(a_(i, j) % a_(t, t))) {
                            bad = i;
                            break;
                        }
                if (bad == rows)
                    break;
                row_sub(t, bad, T(-1));
            }
            if (sign_of(a_(t, t)) < 0)
                row_negate(t);
        }

        SmithDecomposition out;
        out.rank = t;
        out.diagonal.reserve(t);
        for (std::size_t k = 0; k < t; ++k)
            out.diagonal.push_back(to_integer(a_(k, k)));
        if (L_)
            out.left = to_integer(*L_);
        if (Li_)
            out.left_inverse = to_integer(*Li_);
        if (R_)
            out.right = to_integer(*R_);
        if (Ri_)
            out.right_inverse = to_integer(*Ri_);
        return out;
    }

private:
    // Minimal magnitude first; among those, the least Markowitz fill-in
    // (r - 1)(c - 1) with r, c the active row and column counts.
    bool find_min_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const
    {
        const std::size_t rows = a_.rows(), cols = a_.cols();
        std::vector<std::size_t> rnz(rows, 0), cnz(cols, 0);
        bool found = false;
        T best{};
        for (std::size_t i = t; i < rows; ++i) {
            const T* r = a_.row(i);
            for (std::size_t j = t; j < cols; ++j) {
                if (is_zero(r[j]))
                    continue;
                ++rnz[i];
                ++cnz[j];
                T m = magnitude(r[j]);
                if (!found || m < best) {
                    found = true;
                    best = m;
                }
            }
        }
        if (!found)
            return false;
        std::size_t best_cost = ~std::size_t(0);
        for (std::size_t i = t; i < rows; ++i) {
            if (!rnz[i])
                continue;
            const T* r = a_.row(i);
            for (std::size_t j = t; j < cols; ++j) {
                if (is_zero(r[j]) || magnitude(r[j]) != best)
                    continue;
                std::size_t cost = (rnz[i] - 1) * (cnz[j] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    pi = i;
                    pj = j;
                    if (cost == 0)
                        return true;
                }
            }
        }
        return true;
    }

    void move_line_min_to_pivot(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        T best = magnitude(a_(t, t));
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (!is_zero(a_(i, t)) && magnitude(a_(i, t)) < best) {
                best = magnitude(a_(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (!is_zero(a_(t, j)) && magnitude(a_(t, j)) < best) {
                best = magnitude(a_(t, j));
                bi = t;
                bj = j;
            }
        if (bi != t)
            row_swap(bi, t);
        if (bj != t)
            col_swap(bj, t);
    }

    // row_i -= q * row_t
    void row_sub(std::size_t i, std::size_t t, const T& q)
    {
        const std::size_t c0 = std::min(i, t);
        T* ai = a_.row(i);
        const T* at = a_.row(t);
        for (std::size_t j = c0; j < a_.cols(); ++j)
            if (!is_zero(at[j]))
                ai[j] -= q * at[j];
        if (L_) {
            T* li = L_->row(i);
            const T* lt = L_->row(t);
            for (std::size_t j = 0; j < L_->cols(); ++j)
                if (!is_zero(lt[j]))
                    li[j] -= q * lt[j];
        }
        if (Li_) {
            for (std::size_t r = 0; r < Li_->rows(); ++r)
                if (!is_zero((*Li_)(r, i)))
                    (*Li_)(r, t) += q * (*Li_)(r, i);
        }
    }

    // col_j -= q * col_t
    void col_sub(std::size_t j, std::size_t t, const T& q)
    {
        for (std::size_t i = t; i < a_.rows(); ++i)
            if (!is_zero(a_(i, t)))
                a_(i, j) -= q * a_(i, t);
        if (R_) {
            for (std::size_t r = 0; r < R_->rows(); ++r)
                if (!is_zero((*R_)(r, t)))
                    (*R_)(r, j) -= q * (*R_)(r, t);
        }
        if (Ri_) {
            T* rt = Ri_->row(t);
            const T* rj = Ri_->row(j);
            for (std::size_t c = 0; c < Ri_->cols(); ++c)
                if (!is_zero(rj[c]))
                    rt[c] += q * rj[c];
        }
    }

    void row_swap(std::size_t i, std::size_t t)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            std::swap(a_(i, j), a_(t, j));
        if (L_)
            for (std::size_t j = 0; j < L_->cols(); ++j)
                std::swap((*L_)(i, j), (*L_)(t, j));
        if (Li_)
            for (std::size_t r = 0; r < Li_->rows(); ++r)
                std::swap((*Li_)(r, i), (*Li_)(r, t));
    }

    void col_swap(std::size_t j, std::size_t t)
    {
        for (std::size_t i = 0; i < a_.rows(); ++i)
            std::swap(a_(i, j), a_(i, t));
        if (R_)
            for (std::size_t r = 0; r < R_->rows(); ++r)
                std::swap((*R_)(r, j), (*R_)(r, t));
        if (Ri_)
            for (std::size_t c = 0; c < Ri_->cols(); ++c)
                std::swap((*Ri_)(j, c), (*Ri_)(t, c));
    }

    void row_negate(std::size_t t)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            a_(t, j) = -a_(t, j);
        if (L_)
            for (std::size_t j = 0; j < L_->cols(); ++j)
                (*L_)(t, j) = -(*L_)(t, j);
        if (Li_)
            for (std::size_t r = 0; r < Li_->rows(); ++r)
                (*Li_)(r, t) = -(*Li_)(r, t);
    }

    Matrix<T> a_;
    std::optional<Matrix<T>> L_, Li_, R_, Ri_;
};

}  // namespace

SmithDecomposition smith_decompose(const IntMatrix& a, const SmithOptions& options)
{
    try {
        return SmithEngine<Checked64>(to_checked(a), options).run();
    } catch (const Overflow&) {
        return SmithEngine<Integer>(a, options).run();
    }
}

SmithForm smith_normal_form(const IntMatrix& a)
{
    SmithDecomposition s = smith_decompose(a, {.left_inverse = true, .right_inverse = true});
    SmithForm f;
    f.U = std::move(s.left_inverse);
    f.V = std::move(s.right_inverse);
    f.D = IntMatrix(a.rows(), a.cols());
    for (std::size_t k = 0; k < s.rank; ++k)
        f.D(k, k) = s.diagonal[k];
    return f;
}

IntMatrix inverse_unimodular(const IntMatrix& a)
{
    auto inv = modular::unimodular_inverse(a);
    if (!inv)
        throw PreconditionError("matrix is not unimodular");
    return *inv;
}

}  // namespace hodgkin::homology
