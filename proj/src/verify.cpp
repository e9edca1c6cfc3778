#include "hodgkin/verify.hpp"

#include <algorithm>
#include <bit>
#include <concepts>
#include <numeric>

#include "hodgkin/power_series_oracle.hpp"
#include "hodgkin/smith.hpp"

namespace hodgkin::verify {

using cartan::RootDatum;
using cartan::SmallMatrix;
using cartan::WeylGroup;
using laurent::LaurentPoly;

namespace {

Integer abs_value(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

// Counts failures over a loop and keeps the first witness.
struct Tally {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string witness;

    void operator()(bool ok, const std::string& why)
    {
        ++trials;
        if (!ok && failures++ == 0)
            witness = why;
    }
    void operator()(bool ok, const char* why) { (*this)(ok, std::string(why)); }
    template <class Fn>
        requires std::invocable<Fn&>
    void operator()(bool ok, Fn&& why)
    {
        ++trials;
        if (!ok && failures++ == 0)
            witness = why();
    }
    Check check() const
    {
        if (!failures)
            return {name, trials > 0, trials > 0 ? "" : "no trials ran"};
        return {name, false,
                std::to_string(failures) + " of " + std::to_string(trials) + " failed; first: " + witness};
    }
};

Tally tally(std::string name)
{
    Tally t;
    t.name = std::move(name);
    return t;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range)
{
    std::uniform_int_distribution<int> entry(-range, range);
    IntMatrix a(r, c);
    for (auto& x : a.data())
        x = entry(rng);
    return a;
}

// gcd of all k x k minors, by Bareiss on each selected submatrix.
Integer minor_gcd(const IntMatrix& a, std::size_t k)
{
    std::vector<std::size_t> rows(k), cols(k);
    std::iota(rows.begin(), rows.end(), 0);
    Integer g = 0;
    auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
        std::size_t k = idx.size();
        for (std::size_t i = k; i-- > 0;)
            if (idx[i] < n - k + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
                return true;
            }
        return false;
    };
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = a(rows[i], cols[j]);
            g = gcd(g, abs_value(determinant_bareiss(sub)));
        } while (next(cols, a.cols()));
    } while (next(rows, a.rows()));
    return g;
}

bool same_homology_coords(const homology::DegreeHomology& h, const IntVector& x, const IntVector& y)
{
    return h.reduce(x) == h.reduce(y);
}

}  // namespace

LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int terms, int range)
{
    std::uniform_int_distribution<int> count(1, terms);
    std::uniform_int_distribution<int> exponent(-range, range);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<LaurentPoly::Term> t;
    const int k = count(rng);
    for (int s = 0; s < k; ++s) {
        Weight w(nvars);
        for (int i = 0; i < nvars; ++i)
            w[i] = exponent(rng);
        int c = coef(rng);
        if (c == 0)
            c = 1;
        t.emplace_back(w, Integer(c));
    }
    return LaurentPoly::from_terms(nvars, std::move(t));
}

std::vector<int> random_reduced_word(std::mt19937_64& rng, const RootDatum& datum, const WeylGroup& weyl,
                                     const SmallMatrix& w)
{
    std::vector<int> suffix;
    SmallMatrix cur = w;
    for (;;) {
        std::vector<int> descents;
        for (int i = 0; i < datum.rank; ++i)
            if (!datum.is_positive_root(cur.apply(datum.simple_roots[static_cast<std::size_t>(i)])))
                descents.push_back(i);
        if (descents.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
        const int i = descents[pick(rng)];
        suffix.push_back(i);
        cur = cur * weyl.simple_reflections[static_cast<std::size_t>(i)];
    }
    return {suffix.rbegin(), suffix.rend()};
}

std::vector<Check> weyl_suite(const RootDatum& datum, const WeylGroup& weyl)
{
    std::vector<Check> out;
    const Integer closed = cartan::closed_form_weyl_order(datum.type);
    out.push_back({"weyl_order_closed_form", closed == weyl.order(),
                   "|W| = " + std::to_string(weyl.order()) + ", closed form " + closed.str()});

    auto det = tally("weyl_determinants");
    for (const auto& w : weyl.elements) {
        const long d = w.determinant();
        det(d == 1 || d == -1, [&] { return "det = " + std::to_string(d); });
    }
    out.push_back(det.check());

    const SmallMatrix id = SmallMatrix::identity(datum.rank);
    auto inv = tally("simple_reflections_involutions");
    for (std::size_t i = 0; i < weyl.simple_reflections.size(); ++i)
        inv(weyl.simple_reflections[i] * weyl.simple_reflections[i] == id,
            [&] { return "s_" + std::to_string(i + 1) + "^2 != 1"; });
    out.push_back(inv.check());

    const SmallMatrix w0 = weyl.longest_element();
    auto neg = tally("longest_element_negates_simple_roots");
    for (std::size_t i = 0; i < datum.simple_roots.size(); ++i)
        neg(datum.is_negative_root(w0.apply(datum.simple_roots[i])),
            [&] { return "w0 alpha_" + std::to_string(i + 1) + " is not a negative root"; });
    out.push_back(neg.check());

    const int l = cartan::length(datum, w0);
    out.push_back({"longest_length", l == static_cast<int>(datum.positive_roots.size()) &&
                                         weyl.longest_word.size() == datum.positive_roots.size(),
                   "l(w0) = " + std::to_string(l) + ", word length " + std::to_string(weyl.longest_word.size()) +
                       ", |positive roots| = " + std::to_string(datum.positive_roots.size())});
    return out;
}

std::vector<Check> demazure_suite(const RootDatum& datum, const WeylGroup& weyl, const SuiteOptions& options)
{
    std::mt19937_64 rng(options.seed);
    auto idem = tally("demazure_idempotent");
    auto inv = tally("demazure_reflection_invariant");
    for (std::size_t t = 0; t < options.trials; ++t) {
        const LaurentPoly f = random_poly(rng, datum.rank);
        for (int i = 0; i < datum.rank; ++i) {
            const LaurentPoly di = laurent::demazure(datum, i, f);
            idem(laurent::demazure(datum, i, di) == di,
                 [&] { return "D_" + std::to_string(i + 1) + "^2 f != D_" + std::to_string(i + 1) + " f for f = " +
                              laurent::to_string(f); });
            inv(laurent::weyl_act(weyl.simple_reflections[static_cast<std::size_t>(i)], di) == di,
                [&] { return "s_" + std::to_string(i + 1) + " D_" + std::to_string(i + 1) + " f != D_" +
                             std::to_string(i + 1) + " f for f = " + laurent::to_string(f); });
        }
    }
    return {idem.check(), inv.check()};
}

std::vector<Check> reduced_word_suite(const RootDatum& datum, const WeylGroup& weyl, const SuiteOptions& options)
{
    std::mt19937_64 rng(options.seed + 1);
    const SmallMatrix w0 = weyl.longest_element();
    std::vector<std::vector<int>> words;
    std::string name;
    if (datum.rank <= 3) {
        words = cartan::reduced_words(datum, weyl, w0);
        name = "reduced_word_independence_all";
    } else {
        words.push_back(weyl.longest_word);
        for (int k = 0; k < 24; ++k)
            words.push_back(random_reduced_word(rng, datum, weyl, w0));
        name = "reduced_word_independence_sampled";
    }
    auto t = tally(name);
    auto valid = tally("reduced_words_are_reduced");
    for (const auto& w : words)
        valid(w.size() == datum.positive_roots.size() && cartan::word_product(weyl, w, datum.rank) == w0,
              "a word does not represent w0 reduced");
    const int samples = datum.rank <= 3 ? 4 : 2;
    for (int s = 0; s < samples; ++s) {
        const LaurentPoly f = random_poly(rng, datum.rank, 2, 1);
        const LaurentPoly ref = laurent::demazure_word(datum, words.front(), f);
        for (const auto& w : words)
            t(laurent::demazure_word(datum, w, f) == ref, [&] { return "D_w0 differs for f = " + laurent::to_string(f); });
    }
    return {valid.check(), t.check()};
}

std::vector<Check> character_suite(const RootDatum& datum, const WeylGroup& weyl, const SuiteOptions& options)
{
    std::mt19937_64 rng(options.seed + 2);
    std::uniform_int_distribution<int> coord(0, datum.rank <= 2 ? 2 : 1);
    auto dim = tally("character_dimension_formula");
    auto inv = tally("character_weyl_invariant");
    std::vector<Weight> lambdas;
    for (int i = 0; i < datum.rank; ++i)
        lambdas.push_back(Weight::unit(datum.rank, i));
    const int extra = datum.rank <= 3 ? 6 : 2;
    for (int k = 0; k < extra; ++k) {
        Weight l(datum.rank);
        for (int i = 0; i < datum.rank; ++i)
            l[i] = coord(rng);
        lambdas.push_back(l);
    }
    for (const auto& l : lambdas) {
        const LaurentPoly chi = laurent::character(datum, weyl, l);
        const Integer d = cartan::weyl_dimension(datum, l);
        dim(laurent::augmentation(chi) == d, [&] {
            return "dim chi" + l.to_string() + " = " + laurent::augmentation(chi).str() + ", formula " + d.str();
        });
        for (const auto& s : weyl.simple_reflections)
            inv(laurent::weyl_act(s, chi) == chi, [&] { return "chi" + l.to_string() + " is not invariant"; });
    }
    return {dim.check(), inv.check()};
}

std::vector<Check> euler_suite(const RootDatum& datum, const WeylGroup& weyl, const flagk::EulerPairing& euler,
                               const SuiteOptions& options)
{
    std::mt19937_64 rng(options.seed + 3);
    std::uniform_int_distribution<int> coord(-3, 3);
    auto bwb = tally("euler_pairing_dimension_polynomial");
    auto literal = tally("euler_pairing_literal_route");
    const std::size_t literal_trials = datum.rank <= 3 ? options.trials : options.trials / 5;
    for (std::size_t t = 0; t < options.trials; ++t) {
        Weight mu(datum.rank);
        for (int i = 0; i < datum.rank; ++i)
            mu[i] = coord(rng);
        const Integer v = euler.monomial(mu);
        const Integer d = cartan::weyl_dimension(datum, mu);
        bwb(v == d, [&] { return "L(e^" + mu.to_string() + ") = " + v.str() + ", polynomial " + d.str(); });
        if (t < literal_trials) {
            const Integer lit = flagk::pairing(datum, weyl, LaurentPoly::monomial(mu), LaurentPoly::constant(datum.rank, 1));
            literal(v == lit, [&] { return "e^" + mu.to_string() + ": memoized " + v.str() + ", literal " + lit.str(); });
        }
    }
    return {bwb.check(), literal.check()};
}

std::vector<Check> laurent_suite(int nvars, const SuiteOptions& options)
{
    std::mt19937_64 rng(options.seed + 4);
    auto ring = tally("laurent_ring_axioms");
    auto aug = tally("laurent_augmentation_multiplicative");
    auto round = tally("augmentation_ideal_round_trip");
    for (std::size_t t = 0; t < options.trials; ++t) {
        const LaurentPoly a = random_poly(rng, nvars), b = random_poly(rng, nvars), c = random_poly(rng, nvars);
        const bool ok = (a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c &&
                        (a - a).is_zero() && a + LaurentPoly(nvars) == a &&
                        a * LaurentPoly::constant(nvars, 1) == a;
        ring(ok, [&] { return "a = " + laurent::to_string(a) + ", b = " + laurent::to_string(b); });
        aug(laurent::augmentation(a * b) == laurent::augmentation(a) * laurent::augmentation(b),
            [&] { return "a = " + laurent::to_string(a); });
        const LaurentPoly f = a - LaurentPoly::constant(nvars, laurent::augmentation(a));
        const auto parts = laurent::decompose_augmentation_ideal(f);
        round(parts.size() == static_cast<std::size_t>(nvars) && laurent::assemble_augmentation_ideal(parts) == f,
              [&] { return "f = " + laurent::to_string(f); });
    }
    return {ring.check(), aug.check(), round.check()};
}

std::vector<Integer> determinantal_invariant_factors(const IntMatrix& a)
{
    std::vector<Integer> out;
    Integer prev = 1;
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= lim; ++k) {
        const Integer g = minor_gcd(a, k);
        if (g.is_zero())
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<Check> smith_suite(const SuiteOptions& options)
{
    std::mt19937_64 rng(options.seed + 5);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    auto audit = tally("smith_transforms_audit");
    auto recon = tally("smith_reconstruction_unimodular");
    auto divisors = tally("smith_determinantal_divisors");
    for (std::size_t t = 0; t < options.trials; ++t) {
        const std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a;
        switch (t % 3) {
        case 0:
            a = random_matrix(rng, r, c, 4);
            break;
        case 1: {
            // Rank-deficient product.
            const std::size_t k = std::max<std::size_t>(1, std::min(r, c) - 1);
            a = random_matrix(rng, r, k, 3) * random_matrix(rng, k, c, 3);
            break;
        }
        default: {
            // Forced torsion: diagonal with common factors, mixed by unimodular-ish noise.
            a = random_matrix(rng, r, c, 2);
            for (std::size_t j = 0; j < c; ++j)
                for (std::size_t i = 0; i < r; ++i)
                    a(i, j) *= static_cast<long>(2 + j % 3);
            break;
        }
        }
        audit(homology::audit_smith(a), [&] { return "audit failed on " + to_string(a); });
        const homology::SmithForm s = homology::smith_normal_form(a);
        const Integer du = determinant_bareiss(s.U), dv = determinant_bareiss(s.V);
        recon(s.U * s.D * s.V == a && abs_value(du) == 1 && abs_value(dv) == 1,
              [&] { return "A = U D V fails on " + to_string(a); });
        std::vector<Integer> diag;
        for (std::size_t i = 0; i < std::min(r, c); ++i)
            if (!s.D(i, i).is_zero())
                diag.push_back(s.D(i, i));
        divisors(diag == determinantal_invariant_factors(a), [&] { return "invariant factors differ on " + to_string(a); });
    }
    return {audit.check(), recon.check(), divisors.check()};
}

std::vector<Check> complex_suite(const pipeline::Pipeline& p)
{
    if (!p.tor)
        return {{"complex_d_squared", false, "no complex was built"}};
    auto d2 = tally("complex_d_squared");
    const auto& c = p.tor->complex();
    const std::size_t n = c.top();
    for (std::size_t q = 2; q <= n; ++q)
        d2((c.d(q - 1) * c.d(q)).is_zero(), [&] { return "Koszul d_" + std::to_string(q - 1) + " d_" + std::to_string(q); });
    // Cochain differentials d'_q = d_{n-q+1}^T.
    for (std::size_t q = 1; q + 1 <= n; ++q) {
        const IntMatrix a = transpose(c.d(n - q + 1));
        const IntMatrix b = transpose(c.d(n - q));
        d2((a * b).is_zero(), [&] { return "cochain d'_" + std::to_string(q) + " d'_" + std::to_string(q + 1); });
    }
    if (d2.trials == 0)
        d2(true, "");
    return {d2.check()};
}

std::vector<Check> golden_a1(const pipeline::Pipeline& p)
{
    if (p.type.to_string() != "A1")
        return {};
    std::vector<Check> out;
    if (!p.module || !p.tor) {
        out.push_back({"a1_golden", false, "pipeline did not finish"});
        return out;
    }
    const auto& mod = *p.module;
    const IntMatrix gram = IntMatrix{{1, 2}, {2, 3}};
    out.push_back({"a1_basis_weights", mod.basis_weights() == std::vector<Weight>{Weight{0}, Weight{1}},
                   "basis is not {1, t}"});
    out.push_back({"a1_gram", mod.gram() == gram, "Gram = " + to_string(mod.gram())});
    out.push_back({"a1_gram_determinant", mod.gram_determinant() == -1, "det = " + mod.gram_determinant().str()});
    const IntMatrix m = IntMatrix{{0, -1}, {1, 2}};
    out.push_back({"a1_multiplication_matrix", mod.mult_matrices().size() == 1 && mod.mult_matrices()[0] == m,
                   "M = " + to_string(mod.mult_matrices()[0])});
    const IntVector t2 = mod.coords(LaurentPoly::monomial(Weight{2}));
    out.push_back({"a1_coords_t_squared", t2 == IntVector{-1, 2}, "coords(t^2) = " + to_string(t2)});
    const IntMatrix d = IntMatrix{{-1, -1}, {1, 1}};
    out.push_back({"a1_koszul_differential", p.tor->complex().d(1) == d, "d_1 = " + to_string(p.tor->complex().d(1))});
    const bool z = p.gens.size() == 1 && p.gens[0].z.chain == IntVector{-1, 1};
    out.push_back({"a1_generator_chain", z, p.gens.empty() ? "no generator" : "z_1 = " + to_string(p.gens[0].z.chain)});
    return out;
}

std::vector<Check> oracle_suite(const pipeline::Pipeline& p)
{
    if (p.datum.rank > 2)
        return {};
    if (!p.module)
        return {{"oracle_dimension", false, "no module was built"}};
    const auto q = oracle::truncated_quotient(p.datum, p.chars);
    const auto c = oracle::compare_with_module(q, *p.module, p.weyl.order());
    return {{"oracle_dimension", c.dimension_match, c.witness},
            {"oracle_characteristic_polynomials", c.charpoly_match, c.witness},
            {"oracle_rank_profile", c.rank_profile_match, c.witness}};
}

std::vector<Check> tor_ring_suite(const pipeline::Pipeline& p, const SuiteOptions& options)
{
    if (!p.module || !p.tor || p.gens.empty() || !p.module->has_dense_table())
        return {};
    const auto& ctx = *p.tor;
    const std::size_t n = ctx.n();
    std::mt19937_64 rng(options.seed + 6);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> deg(0, n);

    // Monomials z_S by repeated multiplication with generators.
    std::vector<std::vector<torring::TorClass>> monomials(n + 1);
    monomials[0].push_back(ctx.unit());
    for (std::size_t q = 1; q <= n; ++q)
        for (unsigned mask : ctx.wedge(q)) {
            const unsigned top = 31u - static_cast<unsigned>(std::countl_zero(mask));
            const unsigned rest = mask & ~(1u << top);
            const auto& prev = ctx.wedge(q - 1);
            const std::size_t k = static_cast<std::size_t>(std::find(prev.begin(), prev.end(), rest) - prev.begin());
            monomials[q].push_back(torring::multiply_by_generator(ctx, monomials[q - 1][k], p.gens[top]));
        }
    auto random_class = [&](std::size_t q) {
        IntVector chain(monomials[q].front().chain.size());
        for (const auto& z : monomials[q]) {
            const int c = coef(rng);
            for (std::size_t k = 0; k < chain.size(); ++k)
                chain[k] += c * z.chain[k];
        }
        return ctx.make_class(q, std::move(chain));
    };

    auto unit = tally("tor_unit");
    auto assoc = tally("tor_associative");
    auto comm = tally("tor_graded_commutative");
    const torring::TorClass one = ctx.unit();
    const std::size_t triples = std::min<std::size_t>(options.trials, 20);
    for (std::size_t t = 0; t < triples; ++t) {
        const auto a = random_class(deg(rng)), b = random_class(deg(rng)), c = random_class(deg(rng));
        unit(torring::chain_product(ctx, one, a).chain == a.chain, "1 * a != a");
        const auto ab = torring::chain_product(ctx, a, b);
        const auto ba = torring::chain_product(ctx, b, a);
        if (!ab.overflow()) {
            IntVector signed_ba = ba.chain;
            if ((a.degree * b.degree) % 2)
                for (auto& x : signed_ba)
                    x = -x;
            comm(same_homology_coords(ctx.homology().degrees[ab.degree], ab.chain, signed_ba), [&] {
                return "degrees " + std::to_string(a.degree) + ", " + std::to_string(b.degree);
            });
        }
        const auto left = torring::chain_product(ctx, ab, c);
        const auto right = torring::chain_product(ctx, a, torring::chain_product(ctx, b, c));
        if (!left.overflow())
            assoc(same_homology_coords(ctx.homology().degrees[left.degree], left.chain, right.chain), [&] {
                return "degrees " + std::to_string(a.degree) + ", " + std::to_string(b.degree) + ", " +
                       std::to_string(c.degree);
            });
        else
            assoc(right.overflow(), "degree overflow mismatch");
    }
    return {unit.check(), assoc.check(), comm.check()};
}

bool VerifyResult::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerifyResult run_verify(const std::string& type, Level level, pipeline::PipelineOptions options,
                        const SuiteOptions& suite)
{
    VerifyResult r;
    if (level == Level::Full)
        options.audit = true;
    r.pipeline = pipeline::run_pipeline(type, options);
    const pipeline::Pipeline& p = *r.pipeline;
    r.checks = p.checks;
    if (p.aborted)
        r.checks.push_back({"pipeline_complete", false, "a stage did not finish"});
    auto append = [&](std::vector<Check> more) {
        for (auto& c : more)
            r.checks.push_back(std::move(c));
    };
    append(golden_a1(p));
    if (level == Level::Fast)
        return r;

    append(weyl_suite(p.datum, p.weyl));
    append(demazure_suite(p.datum, p.weyl, suite));
    append(reduced_word_suite(p.datum, p.weyl, suite));
    append(character_suite(p.datum, p.weyl, suite));
    if (p.module)
        append(euler_suite(p.datum, p.weyl, p.module->euler(), suite));
    append(laurent_suite(p.datum.rank, suite));
    append(smith_suite(suite));
    append(complex_suite(p));
    append(oracle_suite(p));
    append(tor_ring_suite(p, suite));
    return r;
}

}  // namespace hodgkin::verify
