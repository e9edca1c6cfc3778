#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodgkin/cartan.hpp"
#include "hodgkin/integer.hpp"
#include "hodgkin/weight.hpp"

namespace hodgkin::laurent {

using cartan::RootDatum;
using cartan::SmallMatrix;
using cartan::WeylGroup;

/// Element of Z[t_1^+-1, ..., t_n^+-1]. Terms are kept sorted by exponent
/// (lexicographic), with no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<Weight, Integer>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : n_(nvars) {}

    static LaurentPoly monomial(const Weight& exponent, Integer coefficient = 1);
    static LaurentPoly constant(int nvars, Integer value);
    /// Sorts, merges equal exponents and drops zeros.
    static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Integer coefficient(const Weight& exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Integer& k, LaurentPoly a);
    LaurentPoly operator-() const;
    /// Multiplication by the monomial e^shift.
    LaurentPoly shifted(const Weight& shift) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    int n_ = 0;
    std::vector<Term> terms_;
};

/// Canonical rendering: monomials in decreasing exponent order, every exponent
/// written out, e.g. "t^(1,0) - 2*t^(0,0)"; the zero polynomial renders as "0".
std::string to_string(const LaurentPoly& f);

/// Sum of coefficients (evaluation at t = 1).
Integer augmentation(const LaurentPoly& f);

/// e^lambda -> e^{w lambda}.
LaurentPoly weyl_act(const SmallMatrix& w, const LaurentPoly& f);

/// D_i(f) = (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i}); `i` is 0-based.
/// Throws DefectError if the division is not exact.
LaurentPoly demazure(const RootDatum& datum, int i, const LaurentPoly& f);

/// D_{w[0]} o ... o D_{w[k-1]} (f): the last letter acts first.
LaurentPoly demazure_word(const RootDatum& datum, const std::vector<int>& word, const LaurentPoly& f);

/// Demazure character D_{w0}(e^lambda) of a dominant weight; checks
/// W-invariance and the Weyl dimension formula on the result.
LaurentPoly character(const RootDatum& datum, const WeylGroup& weyl, const Weight& lambda);

struct CharacterSet {
    std::vector<LaurentPoly> characters;  ///< chi_i of the fundamental representations
    std::vector<Integer> dimensions;      ///< d_i = augmentation(chi_i)
    std::vector<LaurentPoly> reduced;     ///< chi_i - d_i
};

CharacterSet fundamental_characters(const RootDatum& datum, const WeylGroup& weyl);

/// Writes f (with augmentation zero) as sum_j c_j (t_j - 1).
/// Throws PreconditionError if augmentation(f) != 0.
std::vector<LaurentPoly> decompose_augmentation_ideal(const LaurentPoly& f);

/// sum_j c_j (t_j - 1); inverse of decompose_augmentation_ideal.
LaurentPoly assemble_augmentation_ideal(const std::vector<LaurentPoly>& c);

}  // namespace hodgkin::laurent
