#include "hodgkin/homology.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>

#include "hodgkin/parallel.hpp"

namespace hodgkin::homology {

namespace {

IntMatrix rows_from(const IntMatrix& a, std::size_t first)
{
    IntMatrix r(a.rows() - first, a.cols());
    for (std::size_t i = first; i < a.rows(); ++i)
        std::copy(a.row(i), a.row(i) + a.cols(), r.row(i - first));
    return r;
}

IntMatrix columns_from(const IntMatrix& a, std::size_t first)
{
    IntMatrix r(a.rows(), a.cols() - first);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = first; j < a.cols(); ++j)
            r(i, j - first) = a(i, j);
    return r;
}

IntVector column(const IntMatrix& a, std::size_t j)
{
    IntVector v(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        v[i] = a(i, j);
    return v;
}

bool is_identity(const IntMatrix& a)
{
    return a == IntMatrix::identity(a.rows());
}

// Checks left * a * right = diag and left/right invertible against their tracked inverses.
bool audit_decomposition(const IntMatrix& a, const SmithDecomposition& s)
{
    IntMatrix d(a.rows(), a.cols());
    for (std::size_t k = 0; k < s.rank; ++k)
        d(k, k) = s.diagonal[k];
    for (std::size_t k = 0; k + 1 < s.rank; ++k)
        if (s.diagonal[k] <= 0 || !Integer(s.diagonal[k + 1] % s.diagonal[k]).is_zero())
            return false;
    if (!(s.left * a * s.right == d))
        return false;
    if (!is_identity(s.left * s.left_inverse) || !is_identity(s.right * s.right_inverse))
        return false;
    return true;
}

SmithDecomposition decompose(const IntMatrix& a, SmithOptions opt, const HomologyOptions& options,
                             SmithAudit* audit, std::mutex& audit_mutex)
{
    if (options.audit)
        opt = {true, true, true, true};
    SmithDecomposition s = smith_decompose(a, opt);
    if (options.audit) {
        bool ok = audit_decomposition(a, s);
        std::lock_guard<std::mutex> lock(audit_mutex);
        if (audit) {
            ++audit->decompositions;
            if (!ok)
                ++audit->failures;
        }
        if (!ok && !audit)
            throw DefectError("Smith decomposition failed its audit");
    }
    return s;
}

void wedge_rec(std::size_t n, std::size_t p, std::size_t start, unsigned mask, std::vector<unsigned>& out)
{
    if (p == 0) {
        out.push_back(mask);
        return;
    }
    for (std::size_t i = start; i + p <= n; ++i)
        wedge_rec(n, p - 1, i + 1, mask | (1u << i), out);
}

DegreeHomology degree_homology(const ChainComplex& c, std::size_t p, const HomologyOptions& options,
                               SmithAudit* audit, std::mutex& audit_mutex)
{
    const std::size_t rp = c.ranks()[p];
    // Z_p = ker d_p, with basis K = R[:, k:] and coordinate map R^{-1}[k:, :].
    SmithDecomposition s = decompose(c.d(p), {.right = true, .right_inverse = true}, options, audit, audit_mutex);
    const std::size_t k = s.rank;
    IntMatrix kernel = columns_from(s.right, k);
    IntMatrix to_kernel = rows_from(s.right_inverse, k);
    const std::size_t z = rp - k;

    IntMatrix boundaries = p < c.top() ? to_kernel * c.d(p + 1) : IntMatrix(z, 0);
    SmithDecomposition b = decompose(boundaries, {.left = true, .left_inverse = true}, options, audit, audit_mutex);
    IntMatrix left = b.left.rows() ? b.left : IntMatrix::identity(z);
    IntMatrix left_inverse = b.left_inverse.rows() ? b.left_inverse : IntMatrix::identity(z);

    DegreeHomology h;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < b.rank; ++j)
        if (b.diagonal[j] != 1) {
            h.torsion.push_back(b.diagonal[j]);
            keep.push_back(j);
        }
    for (std::size_t j = b.rank; j < z; ++j)
        keep.push_back(j);
    h.betti = z - b.rank;

    IntMatrix gens = kernel * left_inverse;
    IntMatrix red = left * to_kernel;
    h.reduce_rows = IntMatrix(keep.size(), rp);
    for (std::size_t r = 0; r < keep.size(); ++r) {
        h.cycle_basis.push_back(column(gens, keep[r]));
        std::copy(red.row(keep[r]), red.row(keep[r]) + rp, h.reduce_rows.row(r));
    }
    return h;
}

}  // namespace

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : ranks_(std::move(ranks)), d_(std::move(differentials))
{
    if (d_.size() != ranks_.size())
        throw PreconditionError("chain complex: one differential per degree required");
    for (std::size_t p = 0; p < ranks_.size(); ++p) {
        const std::size_t below = p == 0 ? 0 : ranks_[p - 1];
        if (d_[p].rows() != below || d_[p].cols() != ranks_[p])
            throw PreconditionError("chain complex: differential d_" + std::to_string(p) + " has the wrong shape");
    }
    for (std::size_t p = 1; p + 1 < ranks_.size(); ++p)
        if (!(d_[p] * d_[p + 1]).is_zero())
            throw PreconditionError("chain complex: d_" + std::to_string(p) + " d_" + std::to_string(p + 1) +
                                    " != 0");
}

IntVector DegreeHomology::reduce(const IntVector& cycle) const
{
    IntVector y = reduce_rows * cycle;
    for (std::size_t k = 0; k < torsion.size(); ++k)
        y[k] = floor_mod(y[k], torsion[k]);
    return y;
}

std::vector<std::size_t> HomologyResult::betti() const
{
    std::vector<std::size_t> b;
    for (const auto& d : degrees)
        b.push_back(d.betti);
    return b;
}

bool HomologyResult::torsion_free() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeHomology& d) { return d.torsion.empty(); });
}

HomologyResult homology_of(const ChainComplex& complex, const HomologyOptions& options, SmithAudit* audit)
{
    HomologyResult r;
    r.degrees.resize(complex.ranks().size());
    std::mutex audit_mutex;
    parallel_for(r.degrees.size(), options.threads, [&](std::size_t p) {
        r.degrees[p] = degree_homology(complex, p, options, audit, audit_mutex);
    });
    return r;
}

std::vector<unsigned> wedge_basis(std::size_t n, std::size_t p)
{
    std::vector<unsigned> out;
    if (p <= n)
        wedge_rec(n, p, 0, 0u, out);
    return out;
}

ChainComplex koszul_complex(std::size_t n, const std::vector<IntMatrix>& action)
{
    if (action.size() != n)
        throw PreconditionError("koszul_complex: expected " + std::to_string(n) + " operators");
    if (n > 16)
        throw PreconditionError("koszul_complex: at most 16 operators");
    const std::size_t m = n ? action.front().rows() : 1;
    for (const auto& a : action)
        if (a.rows() != m || a.cols() != m)
            throw PreconditionError("koszul_complex: operators must be square of equal size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(action[i] * action[j] == action[j] * action[i]))
                throw PreconditionError("koszul_complex: operators " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " do not commute");

    std::vector<IntMatrix> shifted;
    for (const auto& a : action)
        shifted.push_back(a - IntMatrix::identity(m));

    std::vector<std::vector<unsigned>> bases(n + 1);
    for (std::size_t p = 0; p <= n; ++p)
        bases[p] = wedge_basis(n, p);

    std::vector<std::size_t> ranks(n + 1);
    std::vector<IntMatrix> d(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        ranks[p] = bases[p].size() * m;
        d[p] = IntMatrix(p == 0 ? 0 : bases[p - 1].size() * m, ranks[p]);
        if (p == 0)
            continue;
        const auto& lower = bases[p - 1];
        for (std::size_t s = 0; s < bases[p].size(); ++s) {
            const unsigned mask = bases[p][s];
            int k = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(mask & (1u << i)))
                    continue;
                ++k;
                const unsigned face = mask & ~(1u << i);
                const std::size_t t =
                    static_cast<std::size_t>(std::find(lower.begin(), lower.end(), face) - lower.begin());
                const int sign = k % 2 == 1 ? 1 : -1;
                const IntMatrix& b = shifted[i];
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < m; ++c)
                        if (!b(r, c).is_zero())
                            d[p](t * m + r, s * m + c) = sign * b(r, c);
            }
        }
    }
    return ChainComplex(std::move(ranks), std::move(d));
}

HomologyResult ext_via_cochain(std::size_t n, const std::vector<IntMatrix>& action, const HomologyOptions& options,
                               SmithAudit* audit)
{
    ChainComplex c = koszul_complex(n, action);
    // Reindex q = n - p so the cochain complex becomes a chain complex:
    // d'_q = (d_{n-q+1})^T : C^{n-q} -> C^{n-q+1}.
    const std::size_t top = c.top();
    std::vector<std::size_t> ranks(top + 1);
    std::vector<IntMatrix> d(top + 1);
    for (std::size_t q = 0; q <= top; ++q) {
        ranks[q] = c.ranks()[top - q];
        d[q] = q == 0 ? IntMatrix(0, ranks[0]) : transpose(c.d(top - q + 1));
    }
    HomologyResult h = homology_of(ChainComplex(std::move(ranks), std::move(d)), options, audit);
    std::reverse(h.degrees.begin(), h.degrees.end());
    return h;
}

bool audit_smith(const IntMatrix& a)
{
    SmithDecomposition s = smith_decompose(a, {true, true, true, true});
    return audit_decomposition(a, s);
}

}  // namespace hodgkin::homology
