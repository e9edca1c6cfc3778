#include "hodgkin/laurent.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace hodgkin::laurent {

namespace {

int floor_half(int v)
{
    return v >= 0 ? v / 2 : -((-v + 1) / 2);
}

std::vector<LaurentPoly::Term> merge_sorted(std::vector<LaurentPoly::Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LaurentPoly::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else {
            if (!out.empty() && out.back().second.is_zero())
                out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().second.is_zero())
        out.pop_back();
    return out;
}

void check_vars(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.nvars() != b.nvars())
        throw PreconditionError("Laurent polynomials with different numbers of variables");
}

}  // namespace

LaurentPoly LaurentPoly::monomial(const Weight& exponent, Integer coefficient)
{
    LaurentPoly p(exponent.size());
    if (!coefficient.is_zero())
        p.terms_.emplace_back(exponent, std::move(coefficient));
    return p;
}

LaurentPoly LaurentPoly::constant(int nvars, Integer value)
{
    return monomial(Weight(nvars), std::move(value));
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms)
{
    LaurentPoly p(nvars);
    for (const auto& t : terms)
        if (t.first.size() != nvars)
            throw PreconditionError("exponent length does not match the number of variables");
    p.terms_ = merge_sorted(std::move(terms));
    return p;
}

Integer LaurentPoly::coefficient(const Weight& exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, const Weight& w) { return t.first < w; });
    if (it != terms_.end() && it->first == exponent)
        return it->second;
    return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_vars(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first))
            out.push_back(std::move(*a++));
        else if (a == ae || b->first < a->first)
            out.push_back(*b++);
        else {
            Integer c = a->second + b->second;
            if (!c.is_zero())
                out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    check_vars(a, b);
    if (a.is_zero() || b.is_zero())
        return LaurentPoly(a.nvars());
    if (b.size() == 1)
        return b.terms_.front().second * a.shifted(b.terms_.front().first);
    if (a.size() == 1)
        return a.terms_.front().second * b.shifted(a.terms_.front().first);
    std::unordered_map<Weight, Integer, WeightHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            acc[ea + eb] += ca * cb;
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            terms.emplace_back(e, std::move(c));
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    LaurentPoly r(a.nvars());
    r.terms_ = std::move(terms);
    return r;
}

LaurentPoly operator*(const Integer& k, LaurentPoly a)
{
    if (k.is_zero())
        return LaurentPoly(a.nvars());
    for (auto& t : a.terms_)
        t.second *= k;
    return a;
}

LaurentPoly LaurentPoly::shifted(const Weight& shift) const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.first += shift;
    return r;
}

std::string to_string(const LaurentPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        Integer c = it->second;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        if (c != 1)
            s += c.str() + "*";
        s += "t^" + it->first.to_string();
    }
    return s;
}

Integer augmentation(const LaurentPoly& f)
{
    Integer s = 0;
    for (const auto& t : f.terms())
        s += t.second;
    return s;
}

LaurentPoly weyl_act(const SmallMatrix& w, const LaurentPoly& f)
{
    if (w.size() != f.nvars())
        throw PreconditionError("Weyl element and polynomial have different ranks");
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(f.size());
    for (const auto& [e, c] : f.terms())
        terms.emplace_back(w.apply(e), c);
    return LaurentPoly::from_terms(f.nvars(), std::move(terms));
}

LaurentPoly demazure(const RootDatum& datum, int i, const LaurentPoly& f)
{
    if (i < 0 || i >= datum.rank)
        throw PreconditionError("Demazure index out of range");
    if (f.nvars() != datum.rank)
        throw PreconditionError("polynomial rank does not match the root datum");
    const Weight& alpha = datum.simple_roots[i];

    // Numerator f - e^{-alpha} s_i(f), split into alpha-strings: e^mu = e^r x^p
    // with x = e^{-alpha}, r_i in {0,1}.
    std::vector<std::tuple<Weight, long, Integer>> pieces;
    pieces.reserve(2 * f.size());
    auto add = [&](const Weight& mu, const Integer& c) {
        long j = floor_half(mu[i]);
        Weight r = mu - static_cast<int>(j) * alpha;
        pieces.emplace_back(r, -j, c);
    };
    for (const auto& [mu, c] : f.terms()) {
        add(mu, c);
        Weight reflected = mu - mu[i] * alpha;
        add(reflected - alpha, -c);
    }
    std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b))
            return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });

    // Divide each string by (1 - x): the quotient coefficients are prefix sums.
    std::vector<LaurentPoly::Term> out;
    std::size_t k = 0;
    while (k < pieces.size()) {
        const Weight& base = std::get<0>(pieces[k]);
        Integer running = 0;
        std::size_t e = k;
        while (e < pieces.size() && std::get<0>(pieces[e]) == base)
            ++e;
        for (std::size_t s = k; s < e;) {
            long p = std::get<1>(pieces[s]);
            while (s < e && std::get<1>(pieces[s]) == p)
                running += std::get<2>(pieces[s++]);
            long next = s < e ? std::get<1>(pieces[s]) : p + 1;
            if (running.is_zero())
                continue;
            if (s == e)
                throw DefectError("Demazure operator D_" + std::to_string(i + 1) +
                                  ": numerator not divisible by 1 - e^{-alpha}");
            for (long q = p; q < next; ++q)
                out.emplace_back(base - static_cast<int>(q) * alpha, running);
        }
        k = e;
    }
    return LaurentPoly::from_terms(f.nvars(), std::move(out));
}

LaurentPoly demazure_word(const RootDatum& datum, const std::vector<int>& word, const LaurentPoly& f)
{
    LaurentPoly r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = demazure(datum, *it, r);
    return r;
}

LaurentPoly character(const RootDatum& datum, const WeylGroup& weyl, const Weight& lambda)
{
    if (lambda.size() != datum.rank)
        throw PreconditionError("weight rank does not match the root datum");
    for (int i = 0; i < lambda.size(); ++i)
        if (lambda[i] < 0)
            throw PreconditionError("character requires a dominant weight, got " + lambda.to_string());
    LaurentPoly chi = demazure_word(datum, weyl.longest_word, LaurentPoly::monomial(lambda));
    for (const auto& s : weyl.simple_reflections)
        if (!(weyl_act(s, chi) == chi))
            throw DefectError("character of " + lambda.to_string() + " is not Weyl-invariant");
    if (augmentation(chi) != cartan::weyl_dimension(datum, lambda))
        throw DefectError("character of " + lambda.to_string() + " disagrees with the Weyl dimension formula");
    return chi;
}

CharacterSet fundamental_characters(const RootDatum& datum, const WeylGroup& weyl)
{
    CharacterSet set;
    for (int i = 0; i < datum.rank; ++i) {
        LaurentPoly chi = character(datum, weyl, Weight::unit(datum.rank, i));
        Integer d = augmentation(chi);
        set.reduced.push_back(chi - LaurentPoly::constant(datum.rank, d));
        set.characters.push_back(std::move(chi));
        set.dimensions.push_back(std::move(d));
    }
    return set;
}

std::vector<LaurentPoly> decompose_augmentation_ideal(const LaurentPoly& f)
{
    if (!augmentation(f).is_zero())
        throw PreconditionError("decompose_augmentation_ideal: augmentation is " + augmentation(f).str() +
                                ", expected 0");
    const int n = f.nvars();
    std::vector<std::vector<LaurentPoly::Term>> parts(n);
    // e^lambda - 1 = sum_j (t_j^{lambda_j} - 1) prod_{k>j} t_k^{lambda_k}
    for (const auto& [lambda, a] : f.terms()) {
        Weight tail(n);
        for (int k = 0; k < n; ++k)
            tail[k] = lambda[k];
        for (int j = 0; j < n; ++j) {
            tail[j] = 0;
            const int e = lambda[j];
            // t^e - 1 = (t - 1) g_e(t)
            if (e > 0) {
                for (int r = 0; r < e; ++r) {
                    Weight m = tail;
                    m[j] = r;
                    parts[j].emplace_back(m, a);
                }
            } else if (e < 0) {
                for (int r = e; r < 0; ++r) {
                    Weight m = tail;
                    m[j] = r;
                    parts[j].emplace_back(m, -a);
                }
            }
        }
    }
    std::vector<LaurentPoly> c;
    c.reserve(n);
    for (int j = 0; j < n; ++j)
        c.push_back(LaurentPoly::from_terms(n, std::move(parts[j])));
    return c;
}

LaurentPoly assemble_augmentation_ideal(const std::vector<LaurentPoly>& c)
{
    if (c.empty())
        throw PreconditionError("assemble_augmentation_ideal: empty coefficient list");
    const int n = c.front().nvars();
    LaurentPoly f(n);
    for (int j = 0; j < n; ++j) {
        LaurentPoly tj_minus_one = LaurentPoly::monomial(Weight::unit(n, j)) - LaurentPoly::constant(n, 1);
        f += c[j] * tj_minus_one;
    }
    return f;
}

}  // namespace hodgkin::laurent
