#include "k3fib/lattice.hpp"

#include "k3fib/normal_form.hpp"
#include "k3fib/reduction.hpp"

namespace k3fib {

IntLattice IntLattice::from_gram(const IntMatrix& gram, std::string label) {
    if (!gram.square()) throw DomainError("Gram matrix is not square");
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = i + 1; j < gram.cols(); ++j)
            if (gram(i, j) != gram(j, i))
                throw DomainError("Gram matrix not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + "): " + gram(i, j).get_str() +
                                  " != " + gram(j, i).get_str());
    if (gram.rows() > 0 && determinant(gram) == 0) {
        IntMatrix k = integer_kernel(gram);
        throw DomainError("degenerate Gram matrix, kernel vector " + to_string(k.row(0)));
    }
    IntLattice l;
    l.gram_ = gram;
    l.label_ = std::move(label);
    return l;
}

bool IntLattice::is_even() const {
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) return false;
    return true;
}

IntLattice lattice_from_gram(const IntMatrix& gram, std::string label) {
    return IntLattice::from_gram(gram, std::move(label));
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
    std::string label;
    if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
    return IntLattice::from_gram(block_diagonal(a.gram(), b.gram()), label);
}

IntLattice direct_sum(const std::vector<IntLattice>& parts) {
    IntMatrix g;
    std::string label;
    for (const auto& p : parts) {
        g = block_diagonal(g, p.gram());
        if (!label.empty()) label += "+";
        label += p.label();
    }
    return IntLattice::from_gram(g, label);
}

IntLattice rescale(const IntLattice& l, const Int& n) {
    if (n == 0) throw DomainError("rescaling by zero");
    IntMatrix g = l.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= n;
    std::string label = l.label().empty() ? "" : l.label() + "(" + n.get_str() + ")";
    return IntLattice::from_gram(g, label);
}

Int determinant(const IntLattice& l) { return determinant(l.gram()); }

std::pair<int, int> signature(const IntMatrix& sym) {
    RatMatrix a = to_rat(sym);
    const std::size_t n = a.rows();
    int pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // choose a pivot with nonzero diagonal among the remaining indices
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // all remaining diagonal entries vanish; e_i <- e_i + e_j creates one
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            }
            if (pi == n) break;  // remaining block is zero
            a.add_row(pi, pj, Rat(1));
            a.add_col(pi, pj, Rat(1));
            p = pi;
        }
        done[p] = true;
        const Rat piv = a(p, p);
        if (piv > 0)
            ++pos;
        else
            ++neg;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a(i, p) == 0) continue;
            Rat f = a(i, p) / piv;
            a.add_row(i, p, -f);
            a.add_col(i, p, -f);
        }
    }
    return {pos, neg};
}

std::pair<int, int> signature(const IntLattice& l) { return signature(l.gram()); }

Int DiscriminantGroup::order() const {
    Int o = 1;
    for (const auto& d : invariants) o *= d;
    return o;
}

DiscriminantGroup discriminant_group(const IntLattice& l) {
    SmithForm s = smith_normal_form(l.gram());
    DiscriminantGroup g;
    const std::size_t n = l.gram().rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (s.diagonal[i] == 1) continue;
        g.invariants.push_back(s.diagonal[i]);
        // lift of the i-th generator: V e_i / d_i
        RatVec v(n);
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = Rat(s.V(j, i), s.diagonal[i]);
            v[j].canonicalize();
        }
        g.generators.append_row(v);
    }
    if (g.generators.rows() == 0) g.generators = RatMatrix(0, n);
    return g;
}

DiscriminantForm DiscriminantForm::negated() const {
    DiscriminantForm f = *this;
    for (auto& v : f.q) v = mod2(-v);
    for (std::size_t i = 0; i < f.b.rows(); ++i)
        for (std::size_t j = 0; j < f.b.cols(); ++j) f.b(i, j) = mod1(-f.b(i, j));
    return f;
}

Rat DiscriminantForm::value(const std::vector<Int>& c) const {
    Rat s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        s += Rat(c[i] * c[i]) * q[i];
        for (std::size_t j = i + 1; j < q.size(); ++j) s += 2 * Rat(c[i] * c[j]) * b(i, j);
    }
    return mod2(s);
}

DiscriminantForm discriminant_form(const IntLattice& l) {
    if (!l.is_even()) throw DomainError("discriminant quadratic form requires an even lattice");
    DiscriminantGroup g = discriminant_group(l);
    DiscriminantForm f;
    f.orders = g.invariants;
    f.generators = g.generators;
    const std::size_t k = g.invariants.size();
    RatMatrix gram = to_rat(l.gram());
    f.b = RatMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        RatVec gi = g.generators.row(i);
        f.q.push_back(mod2(bilinear(gram, gi, gi)));
        for (std::size_t j = 0; j < k; ++j) f.b(i, j) = mod1(bilinear(gram, gi, g.generators.row(j)));
    }
    return f;
}

TwoElementaryInvariants two_elementary_invariants(const IntLattice& l) {
    DiscriminantForm f = discriminant_form(l);
    TwoElementaryInvariants t;
    for (const auto& d : f.orders)
        if (d != 2) throw DomainError("lattice is not 2-elementary: invariant factor " + d.get_str());
    t.a = static_cast<int>(f.orders.size());
    // q(x + y) = q(x) + q(y) + 2b(x, y) and 2b is integral, so generators suffice
    for (const auto& q : f.q)
        if (!is_integer(q)) t.delta = 1;
    return t;
}

Sublattice make_sublattice(const IntLattice& ambient, const IntMatrix& basis) {
    if (basis.rows() > 0 && basis.cols() != static_cast<std::size_t>(ambient.rank()))
        throw DomainError("sublattice basis has wrong length");
    if (rank(basis) != static_cast<int>(basis.rows()))
        throw DomainError("sublattice basis is linearly dependent");
    IntMatrix b = basis;
    if (b.rows() == 0) b = IntMatrix(0, ambient.rank());
    return Sublattice{ambient, b};
}

Sublattice orthogonal_complement(const IntLattice& l, const Sublattice& s) {
    IntMatrix m = s.basis * l.gram();
    IntMatrix k = integer_kernel(m);
    // a reduced basis keeps later computations small
    IntMatrix g = gram_of(k, l.gram());
    if (k.rows() > 1) {
        auto sig = signature(g);
        if (sig.second == 0 && sig.first == static_cast<int>(k.rows()))
            k = lll_rows(k, l.gram());
        else if (sig.first == 0 && sig.second == static_cast<int>(k.rows()))
            k = lll_rows(k, -l.gram());
        else
            k = lll_rows(k, IntMatrix::identity(l.rank()));
    }
    return Sublattice{l, k};
}

Sublattice saturation(const IntLattice& l, const Sublattice& s) {
    if (s.rank() == 0) return Sublattice{l, IntMatrix(0, l.rank())};
    return Sublattice{l, saturate_rows(s.basis)};
}

std::vector<Int> quotient_group(const Sublattice& big, const Sublattice& small) {
    if (big.rank() != small.rank())
        throw DomainError("quotient of sublattices of different rank (" + std::to_string(big.rank()) +
                          " vs " + std::to_string(small.rank()) + ")");
    if (small.rank() == 0) return {};
    IntMatrix x = solve_in_basis(big.basis, small.basis);
    SmithForm s = smith_normal_form(x);
    return nontrivial_invariants(s);
}

bool is_primitive(const IntLattice& l, const Sublattice& s) {
    if (s.rank() == 0) return true;
    SmithForm f = smith_normal_form(s.basis);
    (void)l;
    for (int i = 0; i < f.rank; ++i)
        if (f.diagonal[i] != 1) return false;
    return true;
}

}  // namespace k3fib
