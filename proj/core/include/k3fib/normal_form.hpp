#pragma once

#include <vector>

#include "k3fib/matrix.hpp"

namespace k3fib {

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inv;
    std::vector<Int> diagonal;  // the first min(m, n) diagonal entries
    int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Nonzero invariant factors greater than one.
std::vector<Int> nontrivial_invariants(const SmithForm& s);

// Row Hermite normal form of the row lattice; only the nonzero rows are kept.
IntMatrix hermite_normal_form(const IntMatrix& rows);

// Z-basis (as rows) of {v : M v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Z-basis (as rows) of (Q-row-span of B) intersected with Z^n.
IntMatrix saturate_rows(const IntMatrix& b);

// Integer solution X of X * basis = target (rows), throws if none exists.
IntMatrix solve_in_basis(const IntMatrix& basis, const IntMatrix& target);

}  // namespace k3fib
