#pragma once

#include <vector>

#include "k3fib/matrix.hpp"

namespace k3fib {

struct LllResult {
    IntMatrix transform;  // rows: new basis in terms of the old one (unimodular)
    IntMatrix gram;       // transform * gram * transform^T
};

// Integral LLL (delta = 3/4) on a positive definite Gram matrix.
LllResult lll_reduce(const IntMatrix& gram);

// LLL-reduce the row basis b with respect to the (positive definite) form gram.
IntMatrix lll_rows(const IntMatrix& b, const IntMatrix& gram);

// All nonzero x with x^T G x <= bound (G positive definite), in input coordinates.
// If exact is set only vectors of norm exactly `bound` are returned.
// Sorted lexicographically for determinism.
std::vector<IntVec> short_vectors(const IntMatrix& gram, const Int& bound, bool exact);

// Exact test for positive definiteness (leading principal minors).
bool is_positive_definite(const IntMatrix& gram);

}  // namespace k3fib
