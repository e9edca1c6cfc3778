#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hodgkin/errors.hpp"

namespace hodgkin {

/// Unbounded integer used for every stored coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Thrown by Checked64 when a result leaves the int64 range. Callers that use
/// the fast path catch it and redo the computation with Integer.
struct Overflow {};

/// 64-bit integer whose arithmetic throws Overflow instead of wrapping.
class Checked64 {
public:
    constexpr Checked64() = default;
    constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design of the scalar concept

    constexpr std::int64_t value() const { return v_; }

    friend Checked64 operator+(Checked64 a, Checked64 b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw Overflow{};
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw Overflow{};
        return r;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw Overflow{};
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b)
    {
        if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1)
            throw Overflow{};
        return a.v_ / b.v_;
    }
    friend Checked64 operator%(Checked64 a, Checked64 b)
    {
        if (b.v_ == -1)
            return 0;
        return a.v_ % b.v_;
    }
    Checked64 operator-() const
    {
        if (v_ == std::numeric_limits<std::int64_t>::min())
            throw Overflow{};
        return -v_;
    }
    Checked64& operator+=(Checked64 o) { return *this = *this + o; }
    Checked64& operator-=(Checked64 o) { return *this = *this - o; }
    Checked64& operator*=(Checked64 o) { return *this = *this * o; }

    friend constexpr bool operator==(Checked64 a, Checked64 b) { return a.v_ == b.v_; }
    friend constexpr auto operator<=>(Checked64 a, Checked64 b) { return a.v_ <=> b.v_; }

private:
    std::int64_t v_ = 0;
};

inline Checked64 abs(Checked64 a) { return a.value() < 0 ? -a : a; }

/// True when x is representable as int64.
bool fits_int64(const Integer& x);

/// Conversions between the two scalar kinds. to_scalar<Checked64> throws
/// Overflow when the value does not fit.
template <class T>
T to_scalar(const Integer& x);
template <>
inline Integer to_scalar<Integer>(const Integer& x) { return x; }
template <>
inline Checked64 to_scalar<Checked64>(const Integer& x)
{
    if (!fits_int64(x))
        throw Overflow{};
    return Checked64(static_cast<std::int64_t>(x));
}

inline Integer to_integer(const Integer& x) { return x; }
inline Integer to_integer(Checked64 x) { return Integer(x.value()); }

inline bool is_zero(const Integer& x) { return x.is_zero(); }
inline bool is_zero(Checked64 x) { return x.value() == 0; }

inline int sign_of(const Integer& x) { return x.sign(); }
inline int sign_of(Checked64 x) { return (x.value() > 0) - (x.value() < 0); }

Integer gcd(const Integer& a, const Integer& b);

/// Floor division and the matching non-negative remainder for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

std::string to_string(const Integer& x);

}  // namespace hodgkin
