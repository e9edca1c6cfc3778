#pragma once

#include <vector>

#include "hodgkin/int_matrix.hpp"

namespace hodgkin::homology {

/// Which transformation matrices the elimination should accumulate.
struct SmithOptions {
    bool left = false;
    bool left_inverse = false;
    bool right = false;
    bool right_inverse = false;
};

/// left * A * right = diag(diagonal) padded with zeros, with d_1 | d_2 | ... and
/// d_k > 0 for k < rank. Matrices not requested in SmithOptions are left empty.
struct SmithDecomposition {
    std::vector<Integer> diagonal;
    std::size_t rank = 0;
    IntMatrix left;
    IntMatrix left_inverse;
    IntMatrix right;
    IntMatrix right_inverse;
};

/// Minimal-absolute-value pivoting Smith elimination. Runs on checked int64 and
/// restarts with unbounded integers if an intermediate value overflows.
SmithDecomposition smith_decompose(const IntMatrix& a, const SmithOptions& options);

/// A = U * D * V with U, V unimodular.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Inverse of a matrix with determinant +-1; throws PreconditionError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

}  // namespace hodgkin::homology
