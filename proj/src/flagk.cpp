#include "hodgkin/flagk.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hodgkin/errors.hpp"
#include "hodgkin/modular.hpp"
#include "hodgkin/parallel.hpp"
#include "hodgkin/smith.hpp"

namespace hodgkin::flagk {

namespace {

using laurent::augmentation;
using laurent::demazure_word;

template <class T>
std::vector<T> matvec(const Matrix<T>& a, const std::vector<T>& x)
{
    std::vector<T> y(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const T* ai = a.row(i);
        T acc(0);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(ai[j]) && !is_zero(x[j]))
                acc += ai[j] * x[j];
        y[i] = acc;
    }
    return y;
}

/// a * x with an int64 fast path (fast is the checked copy of a, if it fits).
IntVector apply(const IntMatrix& a, const std::optional<Matrix<Checked64>>& fast, const IntVector& x)
{
    if (fast) {
        try {
            std::vector<Checked64> xs(x.size());
            for (std::size_t k = 0; k < x.size(); ++k)
                xs[k] = to_scalar<Checked64>(x[k]);
            auto ys = matvec(*fast, xs);
            IntVector y(ys.size());
            for (std::size_t k = 0; k < ys.size(); ++k)
                y[k] = to_integer(ys[k]);
            return y;
        } catch (const Overflow&) {
        }
    }
    return a * x;
}

std::optional<Matrix<Checked64>> checked_copy(const IntMatrix& a)
{
    try {
        return to_checked(a);
    } catch (const Overflow&) {
        return std::nullopt;
    }
}

bool canonical_less(const Weight& a, const Weight& b)
{
    if (a.l1_norm() != b.l1_norm())
        return a.l1_norm() < b.l1_norm();
    return a < b;
}

std::vector<Weight> ball(int n, int radius)
{
    std::vector<Weight> out;
    Weight w(n);
    for (int i = 0; i < n; ++i)
        w[i] = -radius;
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == radius)
            w[i--] = -radius;
        if (i < 0)
            break;
        ++w[i];
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

IntMatrix gram_of(const EulerPairing& euler, const std::vector<Weight>& basis, unsigned threads = 1)
{
    const std::size_t m = basis.size();
    IntMatrix g(m, m);
    parallel_for(m, threads, [&](std::size_t u) {
        for (std::size_t v = u; v < m; ++v)
            g(u, v) = euler.monomial(basis[u] + basis[v]);
    });
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < u; ++v)
            g(u, v) = g(v, u);
    return g;
}

// Extended gcd with g >= 0: s a + t b = g.
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t)
{
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        Integer qt = r0 / r1;
        Integer r2 = r0 - qt * r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        Integer s2 = s0 - qt * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Integer t2 = t0 - qt * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    s = s0;
    t = t0;
}

/// Incremental Hermite basis of a row lattice in Z^m.
class HermiteBasis {
public:
    explicit HermiteBasis(std::size_t m) : rows_(m) {}

    void insert(IntVector v)
    {
        const std::size_t m = rows_.size();
        for (std::size_t k = 0; k < m; ++k) {
            if (v[k].is_zero())
                continue;
            if (rows_[k].empty()) {
                if (v[k] < 0)
                    for (auto& x : v)
                        x = -x;
                rows_[k] = std::move(v);
                normalize(k);
                return;
            }
            IntVector& h = rows_[k];
            Integer g, s, t;
            xgcd(h[k], v[k], g, s, t);
            Integer a = h[k] / g, b = v[k] / g;
            IntVector nh(m), nv(m);
            for (std::size_t j = k; j < m; ++j) {
                nh[j] = s * h[j] + t * v[j];
                nv[j] = a * v[j] - b * h[j];
            }
            h = std::move(nh);
            v = std::move(nv);
            normalize(k);
        }
    }

    bool full() const
    {
        return std::all_of(rows_.begin(), rows_.end(), [](const IntVector& r) { return !r.empty(); });
    }

    /// Coordinates of v in the basis (v must lie in the lattice and the basis be full).
    IntVector coordinates(IntVector v) const
    {
        const std::size_t m = rows_.size();
        IntVector a(m);
        for (std::size_t k = 0; k < m; ++k) {
            if (v[k].is_zero())
                continue;
            if (!Integer(v[k] % rows_[k][k]).is_zero())
                throw DefectError("vector outside the Hermite lattice");
            a[k] = v[k] / rows_[k][k];
            for (std::size_t j = k; j < m; ++j)
                v[j] -= a[k] * rows_[k][j];
        }
        return a;
    }

private:
    // Reduces entries above the pivot of row k modulo that pivot.
    void normalize(std::size_t k)
    {
        const Integer& d = rows_[k][k];
        for (std::size_t i = 0; i < k; ++i) {
            if (rows_[i].empty() || rows_[i][k].is_zero())
                continue;
            Integer qt = floor_div(rows_[i][k], d);
            if (qt.is_zero())
                continue;
            for (std::size_t j = k; j < rows_.size(); ++j)
                rows_[i][j] -= qt * rows_[k][j];
        }
    }

    std::vector<IntVector> rows_;
};

/// Greedy primitive-set growth: keeps a unimodular Q with accepted rows a_j Q
/// supported on columns <= j and equal to 1 in column j.
class PrimitiveGreedy {
public:
    explicit PrimitiveGreedy(std::size_t m) : q_(IntMatrix::identity(m)) {}

    std::size_t accepted() const { return k_; }

    bool offer(const IntVector& a)
    {
        const std::size_t m = q_.rows();
        if (k_ == m)
            return false;
        IntVector y(m);
        for (std::size_t j = 0; j < m; ++j) {
            Integer acc = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (!a[i].is_zero() && !q_(i, j).is_zero())
                    acc += a[i] * q_(i, j);
            y[j] = std::move(acc);
        }
        Integer g = 0;
        for (std::size_t j = k_; j < m; ++j)
            g = gcd(g, y[j]);
        if (g != 1)
            return false;
        for (std::size_t j = k_ + 1; j < m; ++j) {
            if (y[j].is_zero())
                continue;
            Integer gg, s, t;
            xgcd(y[k_], y[j], gg, s, t);
            Integer ap = y[k_] / gg, bq = y[j] / gg;
            for (std::size_t i = 0; i < m; ++i) {
                Integer cp = s * q_(i, k_) + t * q_(i, j);
                Integer cq = ap * q_(i, j) - bq * q_(i, k_);
                q_(i, k_) = std::move(cp);
                q_(i, j) = std::move(cq);
            }
            y[k_] = gg;
            y[j] = 0;
        }
        if (y[k_] < 0)
            for (std::size_t i = 0; i < m; ++i)
                q_(i, k_) = -q_(i, k_);
        ++k_;
        return true;
    }

private:
    IntMatrix q_;
    std::size_t k_ = 0;
};

Integer abs_value(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

}  // namespace

Integer pairing(const RootDatum& datum, const WeylGroup& weyl, const LaurentPoly& f, const LaurentPoly& g)
{
    return augmentation(demazure_word(datum, weyl.longest_word, f * g));
}

EulerPairing::EulerPairing(const RootDatum& datum, const WeylGroup& weyl) : datum_(&datum), weyl_(&weyl) {}

Integer EulerPairing::dominant(const Weight& lambda) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = by_dominant_.find(lambda);
        if (it != by_dominant_.end())
            return it->second;
    }
    Integer value = augmentation(demazure_word(*datum_, weyl_->longest_word, LaurentPoly::monomial(lambda)));
    std::lock_guard<std::mutex> lock(mutex_);
    by_dominant_.emplace(lambda, value);
    return value;
}

Integer EulerPairing::monomial(const Weight& mu) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = by_monomial_.find(mu);
        if (it != by_monomial_.end())
            return it->second;
    }
    const int n = datum_->rank;
    Weight nu = mu + datum_->rho();
    int sign = 1;
    Integer value = 0;
    bool vanishes = false;
    while (true) {
        int i = 0;
        while (i < n && nu[i] > 0)
            ++i;
        if (i == n)
            break;
        if (nu[i] == 0) {
            vanishes = true;
            break;
        }
        nu -= nu[i] * datum_->simple_roots[i];
        sign = -sign;
    }
    if (!vanishes) {
        value = dominant(nu - datum_->rho());
        if (sign < 0)
            value = -value;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    by_monomial_.emplace(mu, value);
    return value;
}

Integer EulerPairing::operator()(const LaurentPoly& f) const
{
    Integer s = 0;
    for (const auto& [mu, c] : f.terms())
        s += c * monomial(mu);
    return s;
}

std::size_t EulerPairing::cached_dominant_values() const
{
    std::lock_guard<std::mutex> lock(mutex_);
    return by_dominant_.size();
}

std::vector<Weight> seed_weights(const RootDatum& datum, const WeylGroup& weyl)
{
    const int n = datum.rank;
    std::vector<Weight> seeds;
    seeds.reserve(weyl.order());
    for (const auto& w : weyl.elements) {
        cartan::SmallMatrix winv = cartan::inverse(w);
        Weight sum(n);
        for (int i = 0; i < n; ++i)
            if (datum.is_negative_root(winv.apply(datum.simple_roots[i])))
                sum[i] = -1;
        seeds.push_back(winv.apply(sum));
    }
    return seeds;
}

BasisSelection select_basis(const RootDatum& datum, const WeylGroup& weyl, const EulerPairing& pairing,
                            const BasisSearchOptions& options)
{
    const std::size_t m = weyl.order();
    const int n = datum.rank;

    std::vector<Weight> seeds;
    if (options.use_seeds) {
        std::set<Weight> seen;
        for (const auto& s : seed_weights(datum, weyl))
            if (seen.insert(s).second)
                seeds.push_back(s);
        if (seeds.size() == m) {
            std::vector<Weight> sorted = seeds;
            std::sort(sorted.begin(), sorted.end(), canonical_less);
            if (abs_value(determinant(gram_of(pairing, sorted))) == 1)
                return {sorted, m, 0};
        }
    }

    for (int radius = 1; radius <= options.max_radius; ++radius) {
        std::vector<Weight> pool = seeds;
        std::set<Weight> seen(seeds.begin(), seeds.end());
        for (const auto& w : ball(n, radius))
            if (seen.insert(w).second)
                pool.push_back(w);
        if (pool.size() < m)
            continue;

        IntMatrix p = gram_of(pairing, pool);
        std::vector<std::size_t> rows = modular::independent_rows(p, m);
        if (rows.size() < m)
            continue;

        // phi(c) = (<v_c, v_b>)_{b in rows} embeds the pool lattice in Z^m.
        auto phi = [&](std::size_t c) {
            IntVector v(m);
            for (std::size_t k = 0; k < m; ++k)
                v[k] = p(c, rows[k]);
            return v;
        };
        HermiteBasis hermite(m);
        for (std::size_t c = 0; c < pool.size(); ++c)
            hermite.insert(phi(c));
        if (!hermite.full())
            throw DefectError("pool lattice lost rank during Hermite reduction");

        PrimitiveGreedy greedy(m);
        std::vector<std::size_t> accepted;
        for (std::size_t c = 0; c < pool.size() && greedy.accepted() < m; ++c)
            if (greedy.offer(hermite.coordinates(phi(c))))
                accepted.push_back(c);
        if (accepted.size() < m)
            continue;

        std::vector<Weight> basis;
        std::size_t seeded = 0;
        for (std::size_t c : accepted) {
            basis.push_back(pool[c]);
            if (c < seeds.size())
                ++seeded;
        }
        std::sort(basis.begin(), basis.end(), canonical_less);
        // The accepted classes span the pool lattice; it is all of K(G/T)
        // exactly when their Gram matrix is unimodular.
        if (abs_value(determinant(gram_of(pairing, basis))) == 1)
            return {basis, seeded, radius};
    }
    throw ResourceError("no unimodular monomial basis within radius " + std::to_string(options.max_radius) +
                        " for " + datum.type.to_string() + "; raise the search radius");
}

IntVector FlagKModule::solve_gram(const IntVector& rhs) const
{
    return apply(gram_inv_, gram_inv_fast_, rhs);
}

IntVector FlagKModule::coords(const LaurentPoly& f) const
{
    if (f.nvars() != datum_->rank)
        throw PreconditionError("coords: polynomial rank does not match the module");
    const std::size_t m = rank();
    IntVector rhs(m);
    for (std::size_t u = 0; u < m; ++u)
        rhs[u] = (*euler_)(f.shifted(basis_[u]));
    return solve_gram(rhs);
}

LaurentPoly FlagKModule::representative(const IntVector& x) const
{
    if (x.size() != rank())
        throw PreconditionError("representative: coordinate vector has the wrong length");
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t u = 0; u < x.size(); ++u)
        if (!x[u].is_zero())
            terms.emplace_back(basis_[u], x[u]);
    return LaurentPoly::from_terms(datum_->rank, std::move(terms));
}

IntVector FlagKModule::basis_product(std::size_t u, std::size_t v) const
{
    const std::size_t m = rank();
    if (u >= m || v >= m)
        throw PreconditionError("basis_product: index out of range");
    if (u > v)
        std::swap(u, v);
    if (!table_.empty())
        return table_[u * m + v];
    const std::size_t key = u * m + v;
    {
        std::lock_guard<std::mutex> lock(*lazy_mutex_);
        auto it = lazy_table_->find(key);
        if (it != lazy_table_->end())
            return it->second;
    }
    IntVector rhs(m);
    for (std::size_t x = 0; x < m; ++x)
        rhs[x] = euler_->monomial(basis_[u] + basis_[v] + basis_[x]);
    IntVector c = solve_gram(rhs);
    std::lock_guard<std::mutex> lock(*lazy_mutex_);
    lazy_table_->emplace(key, c);
    return c;
}

IntVector FlagKModule::multiply(const IntVector& x, const IntVector& y) const
{
    const std::size_t m = rank();
    if (x.size() != m || y.size() != m)
        throw PreconditionError("multiply: coordinate vectors have the wrong length");
    if (table_.empty())
        return coords(representative(x) * representative(y));
    IntVector z(m);
    for (std::size_t u = 0; u < m; ++u) {
        if (x[u].is_zero())
            continue;
        for (std::size_t v = 0; v < m; ++v) {
            if (y[v].is_zero())
                continue;
            Integer c = x[u] * y[v];
            const IntVector& b = table_[std::min(u, v) * m + std::max(u, v)];
            for (std::size_t k = 0; k < m; ++k)
                if (!b[k].is_zero())
                    z[k] += c * b[k];
        }
    }
    return z;
}

IntVector FlagKModule::act(const LaurentPoly& f, const IntVector& x) const
{
    const std::size_t m = rank();
    if (x.size() != m)
        throw PreconditionError("act: coordinate vector has the wrong length");
    IntVector z(m);
    for (const auto& [mu, c] : f.terms()) {
        IntVector y = x;
        for (int i = 0; i < datum_->rank; ++i) {
            const int e = mu[i];
            for (int k = 0; k < (e < 0 ? -e : e); ++k)
                y = e > 0 ? apply(mult_[i], mult_fast_[i], y) : apply(mult_inv_[i], mult_inv_fast_[i], y);
        }
        for (std::size_t k = 0; k < m; ++k)
            z[k] += c * y[k];
    }
    return z;
}

IntMatrix FlagKModule::evaluate(const LaurentPoly& f) const
{
    const std::size_t m = rank();
    IntMatrix r(m, m);
    if (f.is_zero())
        return r;
    // Powers M_i^e, built on demand.
    std::vector<std::unordered_map<int, IntMatrix>> powers(datum_->rank);
    auto power_of = [&](int i, int e) -> const IntMatrix& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.emplace(0, IntMatrix::identity(m));
        const int step = e > 0 ? 1 : -1;
        int have = 0;
        while (cache.count(have + step) && have != e)
            have += step;
        while (have != e) {
            IntMatrix next = cache.at(have) * (step > 0 ? mult_[i] : mult_inv_[i]);
            have += step;
            cache.emplace(have, std::move(next));
        }
        return cache.at(e);
    };
    for (const auto& [mu, c] : f.terms()) {
        IntMatrix mono = IntMatrix::identity(m);
        for (int i = 0; i < datum_->rank; ++i)
            if (mu[i] != 0)
                mono = mono * power_of(i, mu[i]);
        for (std::size_t k = 0; k < r.data().size(); ++k)
            if (!mono.data()[k].is_zero())
                r.data()[k] += c * mono.data()[k];
    }
    return r;
}

ModuleData FlagKModule::data() const
{
    return {basis_, gram_, mult_, seeded_, radius_};
}

void FlagKModule::assemble(const CharacterSet& chars, const ModuleOptions& options, bool have_matrices)
{
    const std::size_t m = rank();
    const int n = datum_->rank;
    checks_.clear();
    auto record = [&](const std::string& name, bool pass, const std::string& witness) {
        checks_.push_back({name, pass, pass ? std::string() : witness});
        if (!pass)
            throw CertificationError(name, witness);
    };

    if (m != weyl_->order())
        record("basis_size", false, std::to_string(m) + " basis weights for |W| = " + std::to_string(weyl_->order()));
    gram_det_ = determinant(gram_);
    record("gram_unimodular", abs_value(gram_det_) == 1, "det(gram) = " + gram_det_.str());
    gram_inv_ = homology::inverse_unimodular(gram_);
    gram_inv_fast_ = checked_copy(gram_inv_);

    // Column w of M_i is coords(t_i e^{lambda_w}).
    std::vector<IntMatrix> computed;
    if (!have_matrices || options.verify) {
        computed.assign(n, IntMatrix(m, m));
        parallel_for(static_cast<std::size_t>(n) * m, options.threads, [&](std::size_t job) {
            const int i = static_cast<int>(job / m);
            const std::size_t w = job % m;
            const Weight shift = basis_[w] + Weight::unit(n, i);
            IntVector rhs(m);
            for (std::size_t u = 0; u < m; ++u)
                rhs[u] = euler_->monomial(shift + basis_[u]);
            IntVector col = solve_gram(rhs);
            for (std::size_t u = 0; u < m; ++u)
                computed[i](u, w) = col[u];
        });
    }
    if (!have_matrices)
        mult_ = computed;
    else if (options.verify) {
        // Not recorded: a warm cache must report the same checks as a cold run.
        if (!(computed == mult_))
            throw CertificationError("cache_mult", "stored multiplication matrices differ from recomputed coordinates");
    }
    if (mult_.size() != static_cast<std::size_t>(n))
        throw CertificationError("mult_columns", "expected " + std::to_string(n) + " multiplication matrices");

    mult_inv_.clear();
    mult_fast_.clear();
    mult_inv_fast_.clear();
    bool unimodular = true;
    std::string det_witness;
    for (int i = 0; i < n && unimodular; ++i) {
        Integer d = determinant(mult_[i]);
        if (abs_value(d) != 1) {
            unimodular = false;
            det_witness = "det(M_" + std::to_string(i + 1) + ") = " + d.str();
        }
    }
    record("mult_unimodular", unimodular, det_witness);
    for (int i = 0; i < n; ++i) {
        mult_inv_.push_back(homology::inverse_unimodular(mult_[i]));
        mult_fast_.push_back(checked_copy(mult_[i]));
        mult_inv_fast_.push_back(checked_copy(mult_inv_[i]));
    }

    unit_ = coords(LaurentPoly::constant(n, 1));

    table_.clear();
    lazy_table_->clear();
    if (m <= options.dense_table_limit) {
        table_.assign(m * m, IntVector());
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = u; v < m; ++v)
                pairs.emplace_back(u, v);
        parallel_for(pairs.size(), options.threads, [&](std::size_t k) {
            auto [u, v] = pairs[k];
            IntVector rhs(m);
            for (std::size_t x = 0; x < m; ++x)
                rhs[x] = euler_->monomial(basis_[u] + basis_[v] + basis_[x]);
            table_[u * m + v] = solve_gram(rhs);
        });
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < u; ++v)
                table_[u * m + v] = table_[v * m + u];
    }

    if (!options.verify)
        return;

    bool commute = true;
    std::string witness;
    for (int i = 0; i < n && commute; ++i)
        for (int j = i + 1; j < n && commute; ++j)
            if (!(mult_[i] * mult_[j] == mult_[j] * mult_[i])) {
                commute = false;
                witness = "M_" + std::to_string(i + 1) + " M_" + std::to_string(j + 1) + " != M_" +
                          std::to_string(j + 1) + " M_" + std::to_string(i + 1);
            }
    record("mult_commute", commute, witness);

    bool aug = true;
    for (int i = 0; i < n && aug; ++i)
        for (std::size_t w = 0; w < m && aug; ++w) {
            Integer s = 0;
            for (std::size_t u = 0; u < m; ++u)
                s += mult_[i](u, w);
            if (s != 1) {
                aug = false;
                witness = "column " + std::to_string(w) + " of M_" + std::to_string(i + 1) + " sums to " + s.str();
            }
        }
    record("augmentation_invariance", aug, witness);

    const IntMatrix id = IntMatrix::identity(m);
    bool rel = true;
    for (int j = 0; j < n && rel; ++j) {
        IntMatrix e = evaluate(chars.characters[j]);
        if (!(e == scaled(id, chars.dimensions[j]))) {
            rel = false;
            witness = "chi_" + std::to_string(j + 1) + "(M) != " + chars.dimensions[j].str() + " * I";
        }
    }
    record("character_relations", rel, witness);

    const unsigned index = static_cast<unsigned>(datum_->positive_roots.size()) + 1;
    bool nil = true;
    for (int i = 0; i < n && nil; ++i)
        if (!power(mult_[i] - id, index).is_zero()) {
            nil = false;
            witness = "(M_" + std::to_string(i + 1) + " - I)^" + std::to_string(index) + " != 0";
        }
    record("unipotent_monodromy", nil, witness);

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    auto unit_vec = [&](std::size_t k) {
        IntVector e(m);
        e[k] = 1;
        return e;
    };

    bool unit_ok = true;
    for (std::size_t u = 0; u < m && unit_ok; ++u) {
        IntVector e = unit_vec(u);
        if (!(multiply(unit_, e) == e) || !(multiply(e, unit_) == e)) {
            unit_ok = false;
            witness = "1 * b_" + std::to_string(u) + " != b_" + std::to_string(u);
        }
    }
    record("unit_identity", unit_ok, witness);

    if (!table_.empty()) {
        bool comm = true;
        for (std::size_t u = 0; u < m && comm; ++u)
            for (std::size_t v = 0; v < m && comm; ++v)
                if (!(table_[u * m + v] == table_[v * m + u])) {
                    comm = false;
                    witness = "b_" + std::to_string(u) + " b_" + std::to_string(v);
                }
        record("table_commutative", comm, witness);
    }

    bool assoc = true;
    const int triples = table_.empty() ? 4 : 24;
    for (int k = 0; k < triples && assoc; ++k) {
        std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        IntVector left = multiply(basis_product(a, b), unit_vec(c));
        IntVector right = multiply(unit_vec(a), basis_product(b, c));
        if (!(left == right)) {
            assoc = false;
            witness = "(b_" + std::to_string(a) + " b_" + std::to_string(b) + ") b_" + std::to_string(c);
        }
    }
    record("table_associative", assoc, witness);
}

FlagKModule build_module(const RootDatum& datum, const WeylGroup& weyl, const CharacterSet& chars,
                         const ModuleOptions& options)
{
    FlagKModule mod;
    mod.datum_ = &datum;
    mod.weyl_ = &weyl;
    mod.euler_ = std::make_shared<EulerPairing>(datum, weyl);
    BasisSelection sel = select_basis(datum, weyl, *mod.euler_, options.search);
    mod.basis_ = std::move(sel.weights);
    mod.seeded_ = sel.seeded;
    mod.radius_ = sel.radius;
    mod.gram_ = gram_of(*mod.euler_, mod.basis_, options.threads);
    mod.assemble(chars, options, false);
    return mod;
}

FlagKModule build_module_from(const RootDatum& datum, const WeylGroup& weyl, const CharacterSet& chars,
                              ModuleData data, const ModuleOptions& options)
{
    FlagKModule mod;
    mod.datum_ = &datum;
    mod.weyl_ = &weyl;
    mod.euler_ = std::make_shared<EulerPairing>(datum, weyl);
    mod.basis_ = std::move(data.basis_weights);
    mod.seeded_ = data.seeded;
    mod.radius_ = data.radius;
    for (const auto& w : mod.basis_)
        if (w.size() != datum.rank)
            throw CertificationError("cache_basis", "basis weight " + w.to_string() + " has the wrong rank");
    if (options.verify) {
        IntMatrix g = gram_of(*mod.euler_, mod.basis_, options.threads);
        if (!(g == data.gram))
            throw CertificationError("cache_gram", "stored Gram matrix differs from recomputed pairings");
    }
    mod.gram_ = std::move(data.gram);
    mod.mult_ = std::move(data.mult_matrices);
    mod.assemble(chars, options, true);
    return mod;
}

}  // namespace hodgkin::flagk
