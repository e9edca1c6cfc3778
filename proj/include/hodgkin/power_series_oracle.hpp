#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hodgkin/cartan.hpp"
#include "hodgkin/flagk.hpp"
#include "hodgkin/laurent.hpp"

namespace hodgkin::oracle {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Q[u_1..u_n] / ((u)^{N+1} + (u^beta sigma~_i(1+u))) with N = |positive roots|,
/// obtained by substituting t_j = 1 + u_j into the reduced characters.
struct PowerSeriesQuotient {
    int truncation = 0;
    std::size_t ambient_dimension = 0;   ///< monomials of degree <= N
    std::size_t dimension = 0;           ///< dimension of the quotient
    std::vector<std::vector<int>> standard_monomials;
    /// Multiplication by t_j = 1 + u_j on the quotient, in the standard monomial basis.
    std::vector<RationalMatrix> multiplication;
};

PowerSeriesQuotient truncated_quotient(const cartan::RootDatum& datum, const laurent::CharacterSet& chars);

/// Coefficients c_0..c_k of det(x I - A), by the Faddeev-LeVerrier recursion.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

RationalMatrix to_rational(const IntMatrix& a);

std::size_t rational_rank(RationalMatrix a);

struct OracleComparison {
    bool dimension_match = false;
    bool charpoly_match = false;
    /// ranks of prod_j (A_j - I)^{e_j} agree for every exponent vector with
    /// |e| <= N + 1 (a similarity invariant of the commuting family).
    bool rank_profile_match = false;
    std::string witness;

    bool pass() const { return dimension_match && charpoly_match && rank_profile_match; }
};

OracleComparison compare_with_module(const PowerSeriesQuotient& q, const flagk::FlagKModule& module,
                                     std::size_t weyl_order);

}  // namespace hodgkin::oracle
