#include "hodgkin/integer.hpp"

namespace hodgkin {

bool fits_int64(const Integer& x)
{
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    return x >= lo && x <= hi;
}

Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Integer floor_mod(const Integer& a, const Integer& b)
{
    return a - floor_div(a, b) * b;
}

std::string to_string(const Integer& x)
{
    return x.str();
}

}  // namespace hodgkin
