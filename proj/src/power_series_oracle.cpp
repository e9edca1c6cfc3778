#include "hodgkin/power_series_oracle.hpp"

#include <algorithm>
#include <map>

namespace hodgkin::oracle {

namespace {

using Exponent = std::vector<int>;

void enumerate(int n, int max_degree, Exponent& cur, int var, int left, std::vector<Exponent>& out)
{
    if (var == n) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur[var] = e;
        enumerate(n, max_degree, cur, var + 1, left - e, out);
    }
    cur[var] = 0;
}

int degree_of(const Exponent& e)
{
    int d = 0;
    for (int x : e)
        d += x;
    return d;
}

// Generalized binomial coefficient C(a, r) for integer a and r >= 0.
Rational binomial(int a, int r)
{
    Rational c = 1;
    for (int k = 0; k < r; ++k)
        c = c * Rational(a - k) / Rational(k + 1);
    return c;
}

class TruncatedSpace {
public:
    TruncatedSpace(int n, int truncation) : n_(n), n_trunc_(truncation)
    {
        Exponent cur(static_cast<std::size_t>(n), 0);
        enumerate(n, truncation, cur, 0, truncation, monomials_);
        // Highest degree first so that row reduction pivots on high-degree terms.
        std::stable_sort(monomials_.begin(), monomials_.end(), [](const Exponent& a, const Exponent& b) {
            if (degree_of(a) != degree_of(b))
                return degree_of(a) > degree_of(b);
            return a > b;
        });
        for (std::size_t k = 0; k < monomials_.size(); ++k)
            index_[monomials_[k]] = k;
    }

    std::size_t size() const { return monomials_.size(); }
    const Exponent& monomial(std::size_t k) const { return monomials_[k]; }

    /// Index of a monomial, or size() if it is truncated away.
    std::size_t index(const Exponent& e) const
    {
        auto it = index_.find(e);
        return it == index_.end() ? monomials_.size() : it->second;
    }

    /// Truncation of prod_j (1 + u_j)^{lambda_j}.
    std::vector<Rational> expand(const Weight& lambda) const
    {
        std::vector<Rational> v(size(), 0);
        for (std::size_t k = 0; k < size(); ++k) {
            Rational c = 1;
            for (int j = 0; j < n_; ++j)
                c *= binomial(lambda[j], monomials_[k][j]);
            v[k] = c;
        }
        return v;
    }

    std::vector<Rational> shift(const std::vector<Rational>& v, const Exponent& beta) const
    {
        std::vector<Rational> out(size(), 0);
        for (std::size_t k = 0; k < size(); ++k) {
            if (v[k] == 0)
                continue;
            Exponent e = monomials_[k];
            for (int j = 0; j < n_; ++j)
                e[j] += beta[j];
            std::size_t t = index(e);
            if (t < size())
                out[t] += v[k];
        }
        return out;
    }

    int truncation() const { return n_trunc_; }

private:
    int n_, n_trunc_;
    std::vector<Exponent> monomials_;
    std::map<Exponent, std::size_t> index_;
};

// Row-reduced echelon basis of a subspace, with pivot columns.
struct Echelon {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;

    void reduce(std::vector<Rational>& v) const
    {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rational c = v[pivots[r]];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (rows[r][j] != 0)
                    v[j] -= c * rows[r][j];
        }
    }

    void insert(std::vector<Rational> v)
    {
        reduce(v);
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0)
            ++p;
        if (p == v.size())
            return;
        const Rational s = v[p];
        for (auto& x : v)
            x /= s;
        for (auto& row : rows) {
            const Rational c = row[p];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0)
                    row[j] -= c * v[j];
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
    }
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    RationalMatrix c(n, std::vector<Rational>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[l][j] != 0)
                    c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

RationalMatrix identity(std::size_t n)
{
    RationalMatrix r(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        r[i][i] = 1;
    return r;
}

RationalMatrix minus_identity(RationalMatrix a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i][i] -= 1;
    return a;
}

void exponents_up_to(std::size_t n, int total, std::vector<int>& cur, std::size_t var, std::vector<std::vector<int>>& out)
{
    if (var == n) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (std::size_t j = 0; j < var; ++j)
        used += cur[j];
    for (int e = 0; e + used <= total; ++e) {
        cur[var] = e;
        exponents_up_to(n, total, cur, var + 1, out);
    }
    cur[var] = 0;
}

std::vector<std::size_t> rank_profile(const std::vector<RationalMatrix>& nilpotent, int total)
{
    const std::size_t n = nilpotent.size();
    const std::size_t m = n ? nilpotent[0].size() : 0;
    std::vector<std::vector<int>> exps;
    std::vector<int> cur(n, 0);
    exponents_up_to(n, total, cur, 0, exps);
    std::vector<std::size_t> ranks;
    for (const auto& e : exps) {
        RationalMatrix p = identity(m);
        for (std::size_t j = 0; j < n; ++j)
            for (int k = 0; k < e[j]; ++k)
                p = multiply(p, nilpotent[j]);
        ranks.push_back(rational_rank(p));
    }
    return ranks;
}

}  // namespace

RationalMatrix to_rational(const IntMatrix& a)
{
    RationalMatrix r(a.rows(), std::vector<Rational>(a.cols(), 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[i][j] = Rational(a(i, j));
    return r;
}

std::size_t rational_rank(RationalMatrix a)
{
    std::size_t r = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<Rational> c(n + 1, 0);
    c[n] = 1;
    RationalMatrix mk(n, std::vector<Rational>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        RationalMatrix next = multiply(a, mk);
        for (std::size_t i = 0; i < n; ++i)
            next[i][i] += c[n - k + 1];
        mk = std::move(next);
        RationalMatrix am = multiply(a, mk);
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            trace += am[i][i];
        c[n - k] = -trace / Rational(static_cast<long>(k));
    }
    return c;
}

PowerSeriesQuotient truncated_quotient(const cartan::RootDatum& datum, const laurent::CharacterSet& chars)
{
    const int n = datum.rank;
    const int truncation = static_cast<int>(datum.positive_roots.size());
    TruncatedSpace space(n, truncation);

    std::vector<std::vector<Rational>> relators;
    for (const auto& sigma : chars.reduced) {
        std::vector<Rational> v(space.size(), 0);
        for (const auto& [lambda, coef] : sigma.terms()) {
            auto e = space.expand(lambda);
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] += Rational(coef) * e[k];
        }
        relators.push_back(std::move(v));
    }

    Echelon ideal;
    for (std::size_t b = 0; b < space.size(); ++b)
        for (const auto& r : relators)
            ideal.insert(space.shift(r, space.monomial(b)));

    PowerSeriesQuotient q;
    q.truncation = truncation;
    q.ambient_dimension = space.size();
    std::vector<bool> is_pivot(space.size(), false);
    for (std::size_t p : ideal.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> standard;
    for (std::size_t k = 0; k < space.size(); ++k)
        if (!is_pivot[k])
            standard.push_back(k);
    // Present the standard monomials from low to high degree.
    std::reverse(standard.begin(), standard.end());
    q.dimension = standard.size();
    for (std::size_t k : standard)
        q.standard_monomials.push_back(space.monomial(k));

    for (int j = 0; j < n; ++j) {
        RationalMatrix t(q.dimension, std::vector<Rational>(q.dimension, 0));
        Exponent uj(static_cast<std::size_t>(n), 0);
        uj[j] = 1;
        for (std::size_t col = 0; col < standard.size(); ++col) {
            std::vector<Rational> v(space.size(), 0);
            v[standard[col]] = 1;
            std::vector<Rational> w = space.shift(v, uj);
            for (std::size_t k = 0; k < v.size(); ++k)
                w[k] += v[k];
            ideal.reduce(w);
            for (std::size_t row = 0; row < standard.size(); ++row)
                t[row][col] = w[standard[row]];
        }
        q.multiplication.push_back(std::move(t));
    }
    return q;
}

OracleComparison compare_with_module(const PowerSeriesQuotient& q, const flagk::FlagKModule& module,
                                     std::size_t weyl_order)
{
    OracleComparison out;
    out.dimension_match = q.dimension == weyl_order && module.rank() == weyl_order;
    if (!out.dimension_match) {
        out.witness = "quotient dimension " + std::to_string(q.dimension) + ", module rank " +
                      std::to_string(module.rank()) + ", |W| = " + std::to_string(weyl_order);
        return out;
    }
    out.charpoly_match = true;
    std::vector<RationalMatrix> a, b;
    for (std::size_t j = 0; j < q.multiplication.size(); ++j) {
        RationalMatrix mj = to_rational(module.mult_matrices()[j]);
        if (characteristic_polynomial(mj) != characteristic_polynomial(q.multiplication[j])) {
            out.charpoly_match = false;
            out.witness = "characteristic polynomials of t_" + std::to_string(j + 1) + " differ";
        }
        a.push_back(minus_identity(mj));
        b.push_back(minus_identity(q.multiplication[j]));
    }
    out.rank_profile_match = rank_profile(a, q.truncation + 1) == rank_profile(b, q.truncation + 1);
    if (!out.rank_profile_match && out.witness.empty())
        out.witness = "ranks of products of (t_j - 1) differ";
    return out;
}

}  // namespace hodgkin::oracle
