#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hodgkin/integer.hpp"
#include "hodgkin/weight.hpp"

namespace hodgkin::cartan {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct Factor {
    Family family;
    int rank;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Ordered product of simple Cartan types, e.g. B2xA1.
struct CartanType {
    std::vector<Factor> factors;

    int rank() const;
    std::string to_string() const;
    friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Grammar FACTOR ("x" FACTOR)*, FACTOR = family letter + decimal rank.
/// Throws UsageError on malformed input or an invalid rank.
CartanType parse_type(std::string_view text);

/// Throws UsageError unless (family, rank) is a valid Dynkin type.
void validate_factor(Family family, int rank);

/// Dense n x n integer matrix; acts on column vectors of fundamental-weight
/// coordinates. Orders lexicographically by entries.
class SmallMatrix {
public:
    SmallMatrix() = default;
    explicit SmallMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
    static SmallMatrix identity(int n);

    int size() const { return n_; }
    int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<int>& entries() const { return a_; }

    Weight apply(const Weight& w) const;
    friend SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y);
    long determinant() const;
    SmallMatrix transposed() const;

    friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;
    friend auto operator<=>(const SmallMatrix& x, const SmallMatrix& y) { return x.a_ <=> y.a_; }

    std::size_t hash() const;

private:
    int n_ = 0;
    std::vector<int> a_;
};

/// Cartan matrix C with C(i,j) = <alpha_i^vee, alpha_j>, so that column j of C
/// holds the fundamental-weight coordinates of the simple root alpha_j.
struct RootDatum {
    CartanType type;
    int rank = 0;
    SmallMatrix cartan_matrix;
    std::vector<Weight> simple_roots;
    /// Positive roots (fundamental-weight coordinates), canonical order.
    std::vector<Weight> positive_roots;
    /// Positive coroots as coefficient vectors over the simple coroots.
    std::vector<Weight> positive_coroots;

    bool is_positive_root(const Weight& w) const;
    bool is_negative_root(const Weight& w) const { return is_positive_root(-w); }
    /// rho = sum of fundamental weights = (1,...,1).
    Weight rho() const;
    /// <lambda, sum_i c_i alpha_i^vee> = sum_i c_i lambda_i.
    static long pair_with_coroot(const Weight& lambda, const Weight& coroot);
};

RootDatum build_root_datum(const CartanType& type);

const std::vector<Weight>& positive_roots(const RootDatum& datum);

/// Closed-form |W| as a product over the factors.
Integer closed_form_weyl_order(const CartanType& type);

inline constexpr std::uint64_t kDefaultWeylOrderGuard = 250000;

struct WeylGroup {
    /// All elements, sorted lexicographically as matrices.
    std::vector<SmallMatrix> elements;
    std::vector<SmallMatrix> simple_reflections;
    /// Reduced word for w0 as 0-based generator indices; w0 = s_{w[0]} ... s_{w[k-1]}.
    std::vector<int> longest_word;

    std::size_t order() const { return elements.size(); }
    std::size_t index_of(const SmallMatrix& w) const;
    SmallMatrix longest_element() const;
};

/// Closure of the simple reflections. Throws ResourceError when |W| exceeds
/// order_guard (checked against the closed form before enumeration).
WeylGroup generate_weyl(const RootDatum& datum, std::uint64_t order_guard = kDefaultWeylOrderGuard);

/// Number of positive roots sent to negative roots by w.
int length(const RootDatum& datum, const SmallMatrix& w);

/// Product s_{w[0]} ... s_{w[k-1]}.
SmallMatrix word_product(const WeylGroup& weyl, const std::vector<int>& word, int rank);

/// All reduced words of the element w (stops after `limit` words).
std::vector<std::vector<int>> reduced_words(const RootDatum& datum, const WeylGroup& weyl,
                                            const SmallMatrix& w, std::size_t limit = 1u << 20);

/// Inverse of a Weyl group element.
SmallMatrix inverse(const SmallMatrix& w);

/// Weyl dimension polynomial prod_{a>0} <lambda+rho, a^vee> / <rho, a^vee>;
/// defined for every integral lambda.
Integer weyl_dimension(const RootDatum& datum, const Weight& lambda);

}  // namespace hodgkin::cartan
