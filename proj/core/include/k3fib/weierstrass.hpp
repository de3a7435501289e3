#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3fib/arith.hpp"

namespace k3fib {

// a + b sqrt(d), d square-free; d = 1 marks a plain rational (b is then always 0).
class QuadExtScalar {
public:
    QuadExtScalar() = default;
    QuadExtScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadExtScalar(Rat a, Rat b = 0, long d = 1);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExtScalar operator+(const QuadExtScalar& o) const;
    QuadExtScalar operator-(const QuadExtScalar& o) const;
    QuadExtScalar operator-() const;
    QuadExtScalar operator*(const QuadExtScalar& o) const;
    QuadExtScalar inverse() const;
    QuadExtScalar operator/(const QuadExtScalar& o) const { return *this * o.inverse(); }
    bool operator==(const QuadExtScalar& o) const;
    std::string str() const;

private:
    static long common(long d1, long d2);
    Rat a_ = 0, b_ = 0;
    long d_ = 1;
};

bool is_squarefree(long d);

class Poly {
public:
    Poly() = default;
    Poly(QuadExtScalar c);  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<QuadExtScalar> coeffs);
    static Poly t();

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<QuadExtScalar>& coeffs() const { return c_; }
    QuadExtScalar lead() const { return c_.empty() ? QuadExtScalar() : c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly pow(unsigned e) const;
    // Euclidean division; returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& o) const;
    Poly monic() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    std::string str() const;

private:
    void trim();
    std::vector<QuadExtScalar> c_;
};

Poly poly_gcd(Poly a, Poly b);

// Reduced quotient of polynomials with monic denominator.
class RatFunc {
public:
    RatFunc() : den_(QuadExtScalar(1)) {}
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::string str() const;

private:
    Poly num_, den_;
};

struct FFPoint {
    bool infinity = true;
    RatFunc x, y;

    static FFPoint at_infinity() { return {}; }
    static FFPoint affine(RatFunc x, RatFunc y) { return {false, std::move(x), std::move(y)}; }
    bool operator==(const FFPoint& o) const;
    std::string str() const;
};

// y^2 = x^3 + a4 x + a6 over K(t); construction rejects a vanishing discriminant.
class FFCurve {
public:
    FFCurve(RatFunc a4, RatFunc a6);

    const RatFunc& a4() const { return a4_; }
    const RatFunc& a6() const { return a6_; }
    RatFunc discriminant() const;

    bool on_curve(const FFPoint& p) const;
    FFPoint negate(const FFPoint& p) const;
    FFPoint add(const FFPoint& p, const FFPoint& q) const;
    FFPoint scalar_mul(long n, const FFPoint& p) const;
    // Least n <= bound with n p = 0, if any; nullopt early once a multiple is provably
    // of infinite order (non-integral, or of too high degree, on a polynomial model).
    std::optional<int> torsion_order(const FFPoint& p, int bound = 12) const;

private:
    void require(const FFPoint& p) const;
    RatFunc a4_, a6_;
};

// Polynomial expressions: integers, t, r (= sqrt d), + - * ^, parentheses, unary minus.
Poly parse_poly(const std::string& expr, long sqrt_d = 1);

}  // namespace k3fib
