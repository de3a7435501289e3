#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3fib/matrix.hpp"

namespace k3fib {

// Free Z-module with a symmetric nondegenerate integral bilinear form.
class IntLattice {
public:
    // Validates symmetry and nondegeneracy.
    static IntLattice from_gram(const IntMatrix& gram, std::string label = "");

    const IntMatrix& gram() const { return gram_; }
    int rank() const { return static_cast<int>(gram_.rows()); }
    bool is_even() const;
    const std::string& label() const { return label_; }
    Int norm(const IntVec& v) const { return bilinear(gram_, v, v); }
    Int inner(const IntVec& a, const IntVec& b) const { return bilinear(gram_, a, b); }

private:
    IntMatrix gram_;
    std::string label_;
};

IntLattice lattice_from_gram(const IntMatrix& gram, std::string label = "");
IntLattice direct_sum(const IntLattice& a, const IntLattice& b);
IntLattice direct_sum(const std::vector<IntLattice>& parts);
IntLattice rescale(const IntLattice& l, const Int& n);
Int determinant(const IntLattice& l);
// (positive, negative) inertia, by exact rational congruence diagonalisation.
std::pair<int, int> signature(const IntLattice& l);
std::pair<int, int> signature(const IntMatrix& symmetric);

// L^# / L as a product of cyclic groups.
struct DiscriminantGroup {
    std::vector<Int> invariants;  // nontrivial invariant factors, d_1 | d_2 | ...
    RatMatrix generators;         // dual-vector lifts, in basis coordinates (rows)
    Int order() const;
    bool trivial() const { return invariants.empty(); }
};

DiscriminantGroup discriminant_group(const IntLattice& l);

// Finite quadratic form on the discriminant group of an even lattice.
struct DiscriminantForm {
    std::vector<Int> orders;
    std::vector<Rat> q;   // q(g_i) in [0, 2)
    RatMatrix b;          // b(g_i, g_j) in [0, 1)
    RatMatrix generators;

    DiscriminantForm negated() const;
    // q-value (in [0,2)) of sum_i c_i g_i
    Rat value(const std::vector<Int>& coeffs) const;
};

DiscriminantForm discriminant_form(const IntLattice& l);

struct TwoElementaryInvariants {
    int a = 0;
    int delta = 0;
};

TwoElementaryInvariants two_elementary_invariants(const IntLattice& l);

// Sublattice given by a basis (rows) in the ambient basis coordinates.
struct Sublattice {
    IntLattice ambient;
    IntMatrix basis;

    int rank() const { return static_cast<int>(basis.rows()); }
    IntMatrix induced_gram() const { return gram_of(basis, ambient.gram()); }
};

// Validates linear independence of the rows.
Sublattice make_sublattice(const IntLattice& ambient, const IntMatrix& basis);
Sublattice orthogonal_complement(const IntLattice& l, const Sublattice& s);
Sublattice saturation(const IntLattice& l, const Sublattice& s);
// big / small for sublattices of equal rank, small contained in big.
std::vector<Int> quotient_group(const Sublattice& big, const Sublattice& small);
bool is_primitive(const IntLattice& l, const Sublattice& s);

}  // namespace k3fib
