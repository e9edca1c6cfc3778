#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hodgkin/int_matrix.hpp"

namespace hodgkin::modular {

/// Primes just below 2^62, largest first (deterministic Miller-Rabin).
const std::vector<std::uint64_t>& primes(std::size_t count);

bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t reduce(const Integer& x, std::uint64_t p);

/// det(a) mod p by Gaussian elimination over F_p.
std::uint64_t determinant_mod(const IntMatrix& a, std::uint64_t p);

/// log2 of the Hadamard bound prod_i ||row_i||.
double hadamard_log2(const IntMatrix& a);

/// Exact determinant by Chinese remaindering against the Hadamard bound.
Integer determinant(const IntMatrix& a);

/// Exact inverse when det(a) = +-1, else nullopt. The candidate is rebuilt by
/// Chinese remaindering until it stabilizes and a * x = I holds exactly.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a);

/// Indices of the first rows (in order) that are linearly independent mod a
/// large prime; such rows are independent over Q. Stops after `want` rows.
std::vector<std::size_t> independent_rows(const IntMatrix& a, std::size_t want);

}  // namespace hodgkin::modular
