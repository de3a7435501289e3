#include "k3fib/matrix.hpp"

#include <sstream>

namespace k3fib {

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

IntMatrix to_int(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat q = m(i, j);
            q.canonicalize();
            if (q.get_den() != 1)
                throw DomainError("non-integral entry " + to_string(q) + " at (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
            r(i, j) = q.get_num();
        }
    return r;
}

Int bilinear(const IntMatrix& gram, const IntVec& x, const IntVec& y) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Int t = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) t += gram(i, j) * y[j];
        s += x[i] * t;
    }
    return s;
}

Rat bilinear(const RatMatrix& gram, const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rat t = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) t += gram(i, j) * y[j];
        s += x[i] * t;
    }
    return s;
}

bool is_symmetric(const IntMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

Int determinant(const IntMatrix& m0) {
    if (!m0.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m0.rows();
    if (n == 0) return 1;
    IntMatrix m = m0;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

int rank(const RatMatrix& m0) {
    RatMatrix m = m0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank(const IntMatrix& m) { return rank(to_rat(m)); }

RatMatrix inverse(const RatMatrix& m0) {
    if (!m0.square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m0.rows();
    RatMatrix a = m0;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw DomainError("singular matrix");
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        Rat piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

IntMatrix gram_of(const IntMatrix& basis, const IntMatrix& gram) {
    return basis * gram * basis.transpose();
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m(i, j).get_str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace k3fib
