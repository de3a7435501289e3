#include "k3fib/normal_form.hpp"

#include <algorithm>

namespace k3fib {

namespace {

struct SnfWork {
    IntMatrix D, U, V, Vi;

    void swap_rows(std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
        Vi.swap_rows(a, b);
    }
    // row[dst] -= q * row[src]
    void sub_row(std::size_t dst, std::size_t src, const Int& q) {
        D.add_row(dst, src, -q);
        U.add_row(dst, src, -q);
    }
    // col[dst] -= q * col[src]
    void sub_col(std::size_t dst, std::size_t src, const Int& q) {
        D.add_col(dst, src, -q);
        V.add_col(dst, src, -q);
        Vi.add_row(src, dst, q);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SnfWork w{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
    const std::size_t lim = std::min(m, n);
    std::size_t t = 0;
    for (; t < lim; ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::size_t pi = m, pj = n;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& v = w.D(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (pi == m || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.D(i, t) == 0) continue;
                Int q = floor_div(w.D(i, t), w.D(t, t));
                w.sub_row(i, t, q);
                if (w.D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.D(t, j) == 0) continue;
                Int q = floor_div(w.D(t, j), w.D(t, t));
                w.sub_col(j, t, q);
                if (w.D(t, j) != 0) clean = false;
            }
            if (!clean) {
                std::size_t bi = t, bj = t;
                Int b = abs(w.D(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (w.D(i, t) != 0 && abs(w.D(i, t)) < b) {
                        b = abs(w.D(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (w.D(t, j) != 0 && abs(w.D(t, j)) < b) {
                        b = abs(w.D(t, j));
                        bi = t;
                        bj = j;
                    }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (w.D(i, j) == 0) continue;
                    Int r;
                    mpz_tdiv_r(r.get_mpz_t(), w.D(i, j).get_mpz_t(), w.D(t, t).get_mpz_t());
                    if (r != 0) {
                        w.D.add_row(t, i, Int(1));
                        w.U.add_row(t, i, Int(1));
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (w.D(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) w.D(t, j) = -w.D(t, j);
            for (std::size_t j = 0; j < m; ++j) w.U(t, j) = -w.U(t, j);
        }
    }
    SmithForm s;
    s.rank = static_cast<int>(t);
    for (std::size_t i = 0; i < lim; ++i) s.diagonal.push_back(w.D(i, i));
    s.U = std::move(w.U);
    s.D = std::move(w.D);
    s.V = std::move(w.V);
    s.V_inv = std::move(w.Vi);
    return s;
}

std::vector<Int> nontrivial_invariants(const SmithForm& s) {
    std::vector<Int> out;
    for (int i = 0; i < s.rank; ++i)
        if (s.diagonal[i] > 1) out.push_back(s.diagonal[i]);
    return out;
}

IntMatrix hermite_normal_form(const IntMatrix& rows) {
    IntMatrix a = rows;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (a(i, c) != 0 && (p == m || abs(a(i, c)) < abs(a(p, c)))) p = i;
            if (p == m) break;
            a.swap_rows(r, p);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, c) == 0) continue;
                Int q = floor_div(a(i, c), a(r, c));
                a.add_row(i, r, -q);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < m && a(r, c) != 0) {
            if (a(r, c) < 0)
                for (std::size_t j = 0; j < n; ++j) a(r, j) = -a(r, j);
            for (std::size_t i = 0; i < r; ++i) {
                Int q = floor_div(a(i, c), a(r, c));
                if (q != 0) a.add_row(i, r, -q);
            }
            ++r;
        }
    }
    IntMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) return IntMatrix::identity(n);
    SmithForm s = smith_normal_form(m);
    IntMatrix k(n - s.rank, n);
    for (std::size_t i = s.rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i - s.rank, j) = s.V(j, i);
    return k;
}

IntMatrix saturate_rows(const IntMatrix& b) {
    SmithForm s = smith_normal_form(b);
    IntMatrix out(s.rank, b.cols());
    for (int i = 0; i < s.rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = s.V_inv(i, j);
    return out;
}

IntMatrix solve_in_basis(const IntMatrix& basis, const IntMatrix& target) {
    // basis = U^-1 D V^-1, so target * V = X * U^-1 * D
    SmithForm s = smith_normal_form(basis);
    IntMatrix tv = target * s.V;
    const std::size_t k = basis.rows();
    IntMatrix y(target.rows(), k);
    for (std::size_t i = 0; i < target.rows(); ++i) {
        for (std::size_t j = 0; j < tv.cols(); ++j) {
            if (j < static_cast<std::size_t>(s.rank)) {
                Int r;
                mpz_tdiv_r(r.get_mpz_t(), tv(i, j).get_mpz_t(), s.diagonal[j].get_mpz_t());
                if (r != 0) throw DomainError("vector not in the lattice spanned by the basis");
                y(i, j) = tv(i, j) / s.diagonal[j];
            } else if (tv(i, j) != 0) {
                throw DomainError("vector not in the span of the basis");
            }
        }
    }
    return y * s.U;
}

}  // namespace k3fib
