#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "hodgkin/errors.hpp"

namespace hodgkin {

/// Largest total rank the engine accepts.
inline constexpr int kMaxRank = 16;

/// Integer vector of length n <= kMaxRank; used both for weights (fundamental-
/// weight coordinates) and for Laurent exponents. Ordered lexicographically.
class Weight {
public:
    Weight() = default;
    explicit Weight(int n) : n_(static_cast<std::uint8_t>(n))
    {
        if (n < 0 || n > kMaxRank)
            throw PreconditionError("weight length out of range");
    }
    Weight(std::initializer_list<int> init) : Weight(static_cast<int>(init.size()))
    {
        int k = 0;
        for (int v : init)
            c_[k++] = v;
    }
    static Weight unit(int n, int i)
    {
        Weight w(n);
        w[i] = 1;
        return w;
    }

    int size() const { return n_; }
    int& operator[](int i) { return c_[i]; }
    int operator[](int i) const { return c_[i]; }

    Weight& operator+=(const Weight& o)
    {
        for (int i = 0; i < n_; ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        for (int i = 0; i < n_; ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a)
    {
        for (int i = 0; i < a.n_; ++i)
            a.c_[i] *= k;
        return a;
    }
    Weight operator-() const { return -1 * *this; }

    bool is_zero() const
    {
        for (int i = 0; i < n_; ++i)
            if (c_[i])
                return false;
        return true;
    }
    int l1_norm() const
    {
        int s = 0;
        for (int i = 0; i < n_; ++i)
            s += c_[i] < 0 ? -c_[i] : c_[i];
        return s;
    }

    friend bool operator==(const Weight& a, const Weight& b) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        for (int i = 0; i < a.n_; ++i)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull ^ n_;
        for (int i = 0; i < n_; ++i) {
            h ^= static_cast<std::uint32_t>(c_[i]);
            h *= 1099511628211ull;
        }
        return h;
    }

    std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + n_}; }
    static Weight from_vector(const std::vector<int>& v)
    {
        Weight w(static_cast<int>(v.size()));
        for (int i = 0; i < w.n_; ++i)
            w.c_[i] = v[i];
        return w;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (int i = 0; i < n_; ++i) {
            if (i)
                s += ',';
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    std::array<int, kMaxRank> c_{};
    std::uint8_t n_ = 0;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace hodgkin
