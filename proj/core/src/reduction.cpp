#include "k3fib/reduction.hpp"

#include <algorithm>

namespace k3fib {

namespace {

// Integral Gram-Schmidt data: d[0] = 1, d[i+1] = det of leading (i+1) minor,
// lam(i, j) = d[j+1] * mu_ij for j < i.
struct IntegralGs {
    std::vector<Int> d;
    IntMatrix lam;
};

IntegralGs integral_gram_schmidt(const IntMatrix& a) {
    const std::size_t n = a.rows();
    IntegralGs gs{std::vector<Int>(n + 1), IntMatrix(n, n)};
    gs.d[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            Int u = a(k, j);
            for (std::size_t i = 0; i < j; ++i) {
                u = gs.d[i + 1] * u - gs.lam(k, i) * gs.lam(j, i);
                mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), gs.d[i].get_mpz_t());
            }
            if (j < k)
                gs.lam(k, j) = u;
            else
                gs.d[k + 1] = u;
        }
        if (gs.d[k + 1] <= 0) throw DomainError("form is not positive definite");
    }
    return gs;
}

}  // namespace

bool is_positive_definite(const IntMatrix& gram) {
    const std::size_t n = gram.rows();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        if (determinant(gram.submatrix(idx, idx)) <= 0) return false;
    }
    return true;
}

LllResult lll_reduce(const IntMatrix& gram) {
    const std::size_t n = gram.rows();
    IntMatrix a = gram;
    IntMatrix h = IntMatrix::identity(n);
    if (n <= 1) return {h, a};
    // 1-based bookkeeping as in the integral algorithm; d[0] = 1
    std::vector<Int> d(n + 1);
    IntMatrix lam(n + 1, n + 1);
    d[0] = 1;
    d[1] = a(0, 0);
    if (d[1] <= 0) throw DomainError("form is not positive definite");
    std::size_t k = 2, kmax = 1;

    auto red = [&](std::size_t kk, std::size_t l) {
        Int two = 2 * lam(kk, l);
        if (abs(two) <= d[l]) return;
        Int q = round_div(lam(kk, l), d[l]);
        // b_k <- b_k - q b_l
        h.add_row(kk - 1, l - 1, -q);
        a.add_row(kk - 1, l - 1, -q);
        a.add_col(kk - 1, l - 1, -q);
        lam(kk, l) -= q * d[l];
        for (std::size_t i = 1; i < l; ++i) lam(kk, i) -= q * lam(l, i);
    };
    auto swapk = [&](std::size_t kk) {
        h.swap_rows(kk - 1, kk - 2);
        a.swap_rows(kk - 1, kk - 2);
        a.swap_cols(kk - 1, kk - 2);
        for (std::size_t j = 1; j + 2 <= kk; ++j) std::swap(lam(kk, j), lam(kk - 1, j));
        Int l = lam(kk, kk - 1);
        Int b = d[kk - 2] * d[kk] + l * l;
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d[kk - 1].get_mpz_t());
        for (std::size_t i = kk + 1; i <= kmax; ++i) {
            Int t = lam(i, kk);
            Int v = d[kk] * lam(i, kk - 1) - l * t;
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d[kk - 1].get_mpz_t());
            lam(i, kk) = v;
            Int w = b * t + l * lam(i, kk);
            mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), d[kk].get_mpz_t());
            lam(i, kk - 1) = w;
        }
        d[kk - 1] = b;
    };

    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 1; j <= k; ++j) {
                Int u = a(k - 1, j - 1);
                for (std::size_t i = 1; i < j; ++i) {
                    u = d[i] * u - lam(k, i) * lam(j, i);
                    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i - 1].get_mpz_t());
                }
                if (j < k)
                    lam(k, j) = u;
                else
                    d[k] = u;
            }
            if (d[k] <= 0) throw DomainError("form is not positive definite");
        }
        red(k, k - 1);
        Int lhs = 4 * d[k] * d[k - 2];
        Int rhs = 3 * d[k - 1] * d[k - 1] - 4 * lam(k, k - 1) * lam(k, k - 1);
        if (lhs < rhs) {
            swapk(k);
            if (k > 2) --k;
        } else {
            for (std::size_t l = k - 2; l >= 1; --l) red(k, l);
            ++k;
        }
    }
    return {h, a};
}

IntMatrix lll_rows(const IntMatrix& b, const IntMatrix& gram) {
    if (b.rows() <= 1) return b;
    LllResult r = lll_reduce(gram_of(b, gram));
    return r.transform * b;
}

std::vector<IntVec> short_vectors(const IntMatrix& gram, const Int& bound, bool exact) {
    const std::size_t n = gram.rows();
    std::vector<IntVec> out;
    if (n == 0 || bound <= 0) return out;
    LllResult red = lll_reduce(gram);
    IntegralGs gs = integral_gram_schmidt(red.gram);

    // level i term: (d_i x_i + s_i)^2 / (d_i d_{i-1}) with 1-based d
    Int den = 1;
    for (std::size_t i = 0; i < n; ++i) den = lcm(den, gs.d[i + 1] * gs.d[i]);
    std::vector<Int> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = den / (gs.d[i + 1] * gs.d[i]);
    const Int budget = bound * den;

    IntVec x(n);
    std::vector<Int> rem(n + 1);  // rem[i]: budget left before choosing coordinate i
    std::vector<Int> hi(n), s(n);
    rem[n] = budget;

    auto centre = [&](std::size_t i) {
        Int acc = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (x[j] != 0) acc += gs.lam(j, i) * x[j];
        return acc;
    };
    auto start_level = [&](std::size_t i) {
        s[i] = centre(i);
        Int t = isqrt(floor_div(rem[i + 1], w[i]));
        const Int& di = gs.d[i + 1];
        x[i] = ceil_div(-t - s[i], di);
        hi[i] = floor_div(t - s[i], di);
    };

    std::size_t i = n - 1;
    start_level(i);
    for (;;) {
        if (x[i] > hi[i]) {
            if (i == n - 1) break;
            ++i;
            ++x[i];
            continue;
        }
        Int y = gs.d[i + 1] * x[i] + s[i];
        Int r = rem[i + 1] - w[i] * y * y;
        if (r < 0) {
            ++x[i];
            continue;
        }
        if (i == 0) {
            rem[0] = r;
            Int used = budget - r;  // = norm * den
            bool nonzero = false;
            for (const Int& v : x)
                if (v != 0) {
                    nonzero = true;
                    break;
                }
            if (nonzero && (!exact || used == budget)) {
                // back to input coordinates: v = x * transform
                out.push_back(row_times(x, red.transform));
            }
            ++x[0];
            continue;
        }
        rem[i] = r;
        --i;
        start_level(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace k3fib
