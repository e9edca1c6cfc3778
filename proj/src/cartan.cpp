#include "hodgkin/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <unordered_set>

namespace hodgkin::cartan {

namespace {

struct MatrixHash {
    std::size_t operator()(const SmallMatrix& m) const { return m.hash(); }
};

Integer factorial(int n)
{
    Integer f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// Symmetric form (alpha_i, alpha_j) on the simple roots of one factor,
// Bourbaki node numbering (0-based here).
std::vector<std::vector<int>> simple_root_form(Family family, int n)
{
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
    switch (family) {
    case Family::A:
        for (int i = 0; i < n; ++i)
            b[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1, -1);
        break;
    case Family::B:  // last node short
        for (int i = 0; i < n; ++i)
            b[i][i] = i + 1 < n ? 4 : 2;
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1, -2);
        break;
    case Family::C:  // last node long
        for (int i = 0; i < n; ++i)
            b[i][i] = i + 1 < n ? 2 : 4;
        for (int i = 0; i + 2 < n; ++i)
            link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
    case Family::D:
        for (int i = 0; i < n; ++i)
            b[i][i] = 2;
        for (int i = 0; i + 2 < n; ++i)
            link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case Family::E:
        for (int i = 0; i < n; ++i)
            b[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i)
            link(i, i + 1, -1);
        break;
    case Family::F:
        b[0][0] = b[1][1] = 4;
        b[2][2] = b[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case Family::G:
        b[0][0] = 2;
        b[1][1] = 6;
        link(0, 1, -3);
        break;
    }
    return b;
}

// Positive roots of the root system with Cartan matrix c, in simple-root
// coordinates, generated as the orbit of the simple roots.
std::vector<Weight> positive_roots_in_simple_coords(const SmallMatrix& c)
{
    const int n = c.size();
    std::set<Weight> roots;
    std::deque<Weight> queue;
    for (int j = 0; j < n; ++j) {
        Weight e = Weight::unit(n, j);
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        Weight a = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            long pairing = 0;
            for (int j = 0; j < n; ++j)
                pairing += static_cast<long>(c(i, j)) * a[j];
            Weight b = a;
            b[i] -= static_cast<int>(pairing);
            if (roots.insert(b).second)
                queue.push_back(b);
        }
    }
    std::vector<Weight> positive;
    for (const auto& r : roots) {
        bool nonneg = true;
        for (int j = 0; j < n; ++j)
            nonneg = nonneg && r[j] >= 0;
        if (nonneg)
            positive.push_back(r);
    }
    return positive;
}

}  // namespace

int CartanType::rank() const
{
    int r = 0;
    for (const auto& f : factors)
        r += f.rank;
    return r;
}

std::string CartanType::to_string() const
{
    std::string s;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k)
            s += 'x';
        s += static_cast<char>(factors[k].family);
        s += std::to_string(factors[k].rank);
    }
    return s;
}

void validate_factor(Family family, int n)
{
    bool ok = false;
    const char* rule = "";
    switch (family) {
    case Family::A: ok = n >= 1; rule = "A requires n>=1"; break;
    case Family::B: ok = n >= 2; rule = "B requires n>=2"; break;
    case Family::C: ok = n >= 2; rule = "C requires n>=2"; break;
    case Family::D: ok = n >= 3; rule = "D requires n>=3"; break;
    case Family::E: ok = n >= 6 && n <= 8; rule = "E requires n in {6,7,8}"; break;
    case Family::F: ok = n == 4; rule = "F requires n=4"; break;
    case Family::G: ok = n == 2; rule = "G requires n=2"; break;
    }
    if (!ok)
        throw UsageError(std::string("invalid rank ") + static_cast<char>(family) + std::to_string(n) + ": " + rule);
}

CartanType parse_type(std::string_view text)
{
    if (text.empty())
        throw UsageError("empty Cartan type");
    CartanType type;
    std::size_t pos = 0;
    for (;;) {
        if (pos >= text.size())
            throw UsageError("malformed Cartan type '" + std::string(text) + "'");
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        if (letter < 'A' || letter > 'G')
            throw UsageError("unknown Cartan family in '" + std::string(text) + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start || pos - start > 3)
            throw UsageError("malformed rank in '" + std::string(text) + "'");
        int n = std::stoi(std::string(text.substr(start, pos - start)));
        auto family = static_cast<Family>(letter);
        validate_factor(family, n);
        type.factors.push_back({family, n});
        if (pos == text.size())
            break;
        if (text[pos] != 'x' && text[pos] != 'X')
            throw UsageError("expected 'x' between factors in '" + std::string(text) + "'");
        ++pos;
    }
    if (type.rank() > kMaxRank)
        throw UsageError("total rank " + std::to_string(type.rank()) + " exceeds the supported maximum " +
                         std::to_string(kMaxRank));
    return type;
}

SmallMatrix SmallMatrix::identity(int n)
{
    SmallMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Weight SmallMatrix::apply(const Weight& w) const
{
    Weight r(n_);
    for (int i = 0; i < n_; ++i) {
        long s = 0;
        for (int j = 0; j < n_; ++j)
            s += static_cast<long>((*this)(i, j)) * w[j];
        r[i] = static_cast<int>(s);
    }
    return r;
}

SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y)
{
    const int n = x.n_;
    SmallMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int v = x(i, k);
            if (!v)
                continue;
            for (int j = 0; j < n; ++j)
                r(i, j) += v * y(k, j);
        }
    return r;
}

long SmallMatrix::determinant() const
{
    // Bareiss on a copy; entries of Weyl and Cartan matrices are small.
    const int n = n_;
    if (n == 0)
        return 1;
    std::vector<long> m(a_.begin(), a_.end());
    auto at = [&](int i, int j) -> long& { return m[static_cast<std::size_t>(i) * n + j]; };
    long prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = k + 1;
            while (p < n && at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

SmallMatrix SmallMatrix::transposed() const
{
    SmallMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

std::size_t SmallMatrix::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (int v : a_) {
        h ^= static_cast<std::uint32_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

bool RootDatum::is_positive_root(const Weight& w) const
{
    return std::binary_search(positive_roots.begin(), positive_roots.end(), w);
}

Weight RootDatum::rho() const
{
    Weight r(rank);
    for (int i = 0; i < rank; ++i)
        r[i] = 1;
    return r;
}

long RootDatum::pair_with_coroot(const Weight& lambda, const Weight& coroot)
{
    long s = 0;
    for (int i = 0; i < lambda.size(); ++i)
        s += static_cast<long>(lambda[i]) * coroot[i];
    return s;
}

RootDatum build_root_datum(const CartanType& type)
{
    RootDatum d;
    d.type = type;
    d.rank = type.rank();
    if (d.rank > kMaxRank)
        throw UsageError("total rank exceeds the supported maximum");
    d.cartan_matrix = SmallMatrix(d.rank);
    int offset = 0;
    for (const auto& f : type.factors) {
        validate_factor(f.family, f.rank);
        auto b = simple_root_form(f.family, f.rank);
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < f.rank; ++j)
                d.cartan_matrix(offset + i, offset + j) = 2 * b[i][j] / b[i][i];
        offset += f.rank;
    }
    const int n = d.rank;
    for (int j = 0; j < n; ++j) {
        Weight a(n);
        for (int i = 0; i < n; ++i)
            a[i] = d.cartan_matrix(i, j);
        d.simple_roots.push_back(a);
    }
    for (const auto& a : positive_roots_in_simple_coords(d.cartan_matrix)) {
        Weight w(n);
        for (int i = 0; i < n; ++i) {
            long s = 0;
            for (int j = 0; j < n; ++j)
                s += static_cast<long>(d.cartan_matrix(i, j)) * a[j];
            w[i] = static_cast<int>(s);
        }
        d.positive_roots.push_back(w);
    }
    std::sort(d.positive_roots.begin(), d.positive_roots.end());
    d.positive_coroots = positive_roots_in_simple_coords(d.cartan_matrix.transposed());
    return d;
}

const std::vector<Weight>& positive_roots(const RootDatum& datum)
{
    return datum.positive_roots;
}

Integer closed_form_weyl_order(const CartanType& type)
{
    Integer order = 1;
    for (const auto& f : type.factors) {
        const int n = f.rank;
        switch (f.family) {
        case Family::A: order *= factorial(n + 1); break;
        case Family::B:
        case Family::C: order *= (Integer(1) << n) * factorial(n); break;
        case Family::D: order *= (Integer(1) << (n - 1)) * factorial(n); break;
        case Family::E: order *= n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600); break;
        case Family::F: order *= 1152; break;
        case Family::G: order *= 12; break;
        }
    }
    return order;
}

std::size_t WeylGroup::index_of(const SmallMatrix& w) const
{
    auto it = std::lower_bound(elements.begin(), elements.end(), w);
    if (it == elements.end() || !(*it == w))
        throw PreconditionError("matrix is not an element of the Weyl group");
    return static_cast<std::size_t>(it - elements.begin());
}

SmallMatrix word_product(const WeylGroup& weyl, const std::vector<int>& word, int rank)
{
    SmallMatrix w = SmallMatrix::identity(rank);
    for (int i : word)
        w = w * weyl.simple_reflections.at(i);
    return w;
}

SmallMatrix WeylGroup::longest_element() const
{
    const int n = simple_reflections.empty() ? 0 : simple_reflections.front().size();
    return word_product(*this, longest_word, n);
}

WeylGroup generate_weyl(const RootDatum& datum, std::uint64_t order_guard)
{
    const Integer expected = closed_form_weyl_order(datum.type);
    if (expected > order_guard)
        throw ResourceError("Weyl group of " + datum.type.to_string() + " has order " + to_string(expected) +
                            ", above the guard " + std::to_string(order_guard) +
                            "; raise --max-weyl-order to at least " + to_string(expected));
    const int n = datum.rank;
    WeylGroup weyl;
    for (int i = 0; i < n; ++i) {
        // s_i(lambda) = lambda - lambda_i alpha_i
        SmallMatrix s = SmallMatrix::identity(n);
        for (int r = 0; r < n; ++r)
            s(r, i) -= datum.simple_roots[i][r];
        weyl.simple_reflections.push_back(s);
    }

    std::unordered_set<SmallMatrix, MatrixHash> seen;
    std::vector<SmallMatrix> frontier{SmallMatrix::identity(n)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<SmallMatrix> next;
        for (const auto& w : frontier)
            for (const auto& s : weyl.simple_reflections) {
                SmallMatrix sw = s * w;
                if (seen.insert(sw).second) {
                    if (seen.size() > order_guard)
                        throw ResourceError("Weyl group closure exceeded the guard " + std::to_string(order_guard));
                    next.push_back(std::move(sw));
                }
            }
        frontier = std::move(next);
    }
    weyl.elements.assign(seen.begin(), seen.end());
    std::sort(weyl.elements.begin(), weyl.elements.end());

    // Greedy descent: append s_i while w(alpha_i) > 0, i.e. while l(w s_i) > l(w).
    SmallMatrix w = SmallMatrix::identity(n);
    for (;;) {
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i)
            if (datum.is_positive_root(w.apply(datum.simple_roots[i])))
                pick = i;
        if (pick < 0)
            break;
        w = w * weyl.simple_reflections[pick];
        weyl.longest_word.push_back(pick);
    }
    return weyl;
}

int length(const RootDatum& datum, const SmallMatrix& w)
{
    int l = 0;
    for (const auto& beta : datum.positive_roots)
        if (!datum.is_positive_root(w.apply(beta)))
            ++l;
    return l;
}

namespace {

void collect_reduced_words(const RootDatum& datum, const WeylGroup& weyl, const SmallMatrix& w,
                           std::vector<int>& suffix, std::vector<std::vector<int>>& out, std::size_t limit)
{
    if (out.size() >= limit)
        return;
    bool identity = true;
    for (int i = 0; i < datum.rank; ++i) {
        if (datum.is_positive_root(w.apply(datum.simple_roots[i])))
            continue;
        identity = false;
        // w = (w s_i) s_i with l(w s_i) = l(w) - 1
        suffix.push_back(i);
        collect_reduced_words(datum, weyl, w * weyl.simple_reflections[i], suffix, out, limit);
        suffix.pop_back();
    }
    if (identity)
        out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const RootDatum& datum, const WeylGroup& weyl, const SmallMatrix& w,
                                            std::size_t limit)
{
    std::vector<std::vector<int>> out;
    std::vector<int> suffix;
    collect_reduced_words(datum, weyl, w, suffix, out, limit);
    return out;
}

SmallMatrix inverse(const SmallMatrix& w)
{
    const SmallMatrix id = SmallMatrix::identity(w.size());
    SmallMatrix prev = id;
    SmallMatrix cur = w;
    for (int k = 0; k < 1000; ++k) {
        if (cur == id)
            return prev;
        prev = cur;
        cur = cur * w;
    }
    throw PreconditionError("element has no finite order below 1000");
}

Integer weyl_dimension(const RootDatum& datum, const Weight& lambda)
{
    const Weight shifted = lambda + datum.rho();
    Integer num = 1, den = 1;
    for (const auto& coroot : datum.positive_coroots) {
        num *= RootDatum::pair_with_coroot(shifted, coroot);
        den *= RootDatum::pair_with_coroot(datum.rho(), coroot);
    }
    if (num % den != 0)
        throw DefectError("Weyl dimension formula produced a non-integer");
    return num / den;
}

}  // namespace hodgkin::cartan
