#include "hodgkin/modular.hpp"

#include <cmath>
#include <mutex>

namespace hodgkin::modular {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0)
            return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1)
                composite = false;
        }
        if (composite)
            return false;
    }
    return true;
}

const std::vector<std::uint64_t>& primes(std::size_t count)
{
    static std::mutex mutex;
    static std::vector<std::uint64_t> list;
    std::lock_guard<std::mutex> lock(mutex);
    std::uint64_t candidate = list.empty() ? (1ull << 62) - 1 : list.back() - 2;
    while (list.size() < count) {
        if (is_prime(candidate))
            list.push_back(candidate);
        candidate -= 2;
    }
    return list;
}

std::uint64_t reduce(const Integer& x, std::uint64_t p)
{
    Integer r = x % p;
    if (r < 0)
        r += p;
    return static_cast<std::uint64_t>(r);
}

namespace {

std::vector<std::uint64_t> reduced(const IntMatrix& a, std::uint64_t p)
{
    std::vector<std::uint64_t> r(a.data().size());
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = reduce(a.data()[k], p);
    return r;
}

// In-place Gauss-Jordan of [a | I] over F_p. Returns false if singular.
bool inverse_mod(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p, std::vector<std::uint64_t>& inv)
{
    inv.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        inv[i * n + i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0)
            ++piv;
        if (piv == n)
            return false;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[c * n + j]);
                std::swap(inv[piv * n + j], inv[c * n + j]);
            }
        const std::uint64_t s = pow_mod(a[c * n + c], p - 2, p);
        for (std::size_t j = 0; j < n; ++j) {
            a[c * n + j] = mul_mod(a[c * n + j], s, p);
            inv[c * n + j] = mul_mod(inv[c * n + j], s, p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i * n + c] == 0)
                continue;
            const std::uint64_t f = a[i * n + c];
            for (std::size_t j = 0; j < n; ++j) {
                if (a[c * n + j])
                    a[i * n + j] = (a[i * n + j] + p - mul_mod(f, a[c * n + j], p)) % p;
                if (inv[c * n + j])
                    inv[i * n + j] = (inv[i * n + j] + p - mul_mod(f, inv[c * n + j], p)) % p;
            }
        }
    }
    return true;
}

// Garner step: x (mod m) combined with r (mod p), result in the symmetric range.
void crt_step(Integer& x, const Integer& m, std::uint64_t r, std::uint64_t p, std::uint64_t m_inv)
{
    std::uint64_t xr = reduce(x, p);
    std::uint64_t t = mul_mod((r + p - xr) % p, m_inv, p);
    x += m * t;
}

Integer symmetric(const Integer& x, const Integer& m)
{
    Integer r = x % m;
    if (r < 0)
        r += m;
    if (r * 2 > m)
        r -= m;
    return r;
}

}  // namespace

std::uint64_t determinant_mod(const IntMatrix& a, std::uint64_t p)
{
    const std::size_t n = a.rows();
    std::vector<std::uint64_t> m = reduced(a, p);
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv * n + c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m[piv * n + j], m[c * n + j]);
            det = (p - det) % p;
        }
        det = mul_mod(det, m[c * n + c], p);
        const std::uint64_t s = pow_mod(m[c * n + c], p - 2, p);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i * n + c] == 0)
                continue;
            const std::uint64_t f = mul_mod(m[i * n + c], s, p);
            for (std::size_t j = c; j < n; ++j)
                if (m[c * n + j])
                    m[i * n + j] = (m[i * n + j] + p - mul_mod(f, m[c * n + j], p)) % p;
        }
    }
    return det;
}

double hadamard_log2(const IntMatrix& a)
{
    double total = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            double v = a(i, j).convert_to<double>();
            s += v * v;
        }
        if (s == 0)
            return -1;
        total += 0.5 * std::log2(s);
    }
    return total;
}

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw PreconditionError("determinant of non-square matrix");
    if (a.rows() == 0)
        return 1;
    const double bits = hadamard_log2(a);
    if (bits < 0)
        return 0;
    // Enough 62-bit primes to cover 2 * bound, plus one spare.
    const std::size_t count = static_cast<std::size_t>(std::ceil((bits + 2) / 61.0)) + 1;
    const auto& ps = primes(count);
    Integer x = 0, m = 1;
    for (std::size_t k = 0; k < count; ++k) {
        const std::uint64_t p = ps[k];
        const std::uint64_t r = determinant_mod(a, p);
        crt_step(x, m, r, p, pow_mod(reduce(m, p), p - 2, p));
        m *= p;
    }
    return symmetric(x, m);
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw PreconditionError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return IntMatrix(0, 0);
    const auto& first = primes(1);
    const std::uint64_t d = determinant_mod(a, first[0]);
    if (d != 1 && d != first[0] - 1)
        return std::nullopt;

    const IntMatrix id = IntMatrix::identity(n);
    constexpr std::size_t kMaxPrimes = 256;
    std::vector<Integer> x(n * n, 0);
    Integer m = 1;
    IntMatrix previous;
    for (std::size_t k = 0; k < kMaxPrimes; ++k) {
        const std::uint64_t p = primes(k + 1)[k];
        std::vector<std::uint64_t> inv;
        if (!inverse_mod(reduced(a, p), n, p, inv))
            return std::nullopt;
        const std::uint64_t m_inv = pow_mod(reduce(m, p), p - 2, p);
        for (std::size_t e = 0; e < n * n; ++e)
            crt_step(x[e], m, inv[e], p, m_inv);
        m *= p;
        IntMatrix candidate(n, n);
        for (std::size_t e = 0; e < n * n; ++e)
            candidate.data()[e] = symmetric(x[e], m);
        if (candidate == previous && a * candidate == id)
            return candidate;
        previous = std::move(candidate);
    }
    throw ResourceError("unimodular inverse did not stabilize after " + std::to_string(kMaxPrimes) + " primes");
}

std::vector<std::size_t> independent_rows(const IntMatrix& a, std::size_t want)
{
    const std::uint64_t p = primes(1)[0];
    std::vector<std::vector<std::uint64_t>> echelon;
    std::vector<std::size_t> pivot_col;
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < a.rows() && chosen.size() < want; ++r) {
        std::vector<std::uint64_t> v(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j)
            v[j] = reduce(a(r, j), p);
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const std::uint64_t c = v[pivot_col[k]];
            if (!c)
                continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (echelon[k][j])
                    v[j] = (v[j] + p - mul_mod(c, echelon[k][j], p)) % p;
        }
        std::size_t col = 0;
        while (col < v.size() && v[col] == 0)
            ++col;
        if (col == v.size())
            continue;
        const std::uint64_t s = pow_mod(v[col], p - 2, p);
        for (auto& e : v)
            e = mul_mod(e, s, p);
        echelon.push_back(std::move(v));
        pivot_col.push_back(col);
        chosen.push_back(r);
    }
    return chosen;
}

}  // namespace hodgkin::modular
