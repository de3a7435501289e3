#include "k3fib/arith.hpp"

namespace k3fib {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

Rat make_rat(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat mod2(const Rat& q) {
    Int den = q.get_den();
    Int num = q.get_num();
    Int m = 2 * den;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
    Rat out(r, den);
    out.canonicalize();
    return out;
}

Rat mod1(const Rat& q) {
    Int den = q.get_den();
    Int num = q.get_num();
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat out(r, den);
    out.canonicalize();
    return out;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int round_div(const Int& a, const Int& b) {
    // floor((2a + b) / 2b)
    Int num = 2 * a + b;
    Int den = 2 * b;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return floor_div(num, den);
}

Int isqrt(const Int& a) {
    if (a < 0) throw DomainError("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool is_integer(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_den() == 1;
}

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw DomainError("integer overflow: " + v.get_str());
    return v.get_si();
}

}  // namespace k3fib
