#include "k3fib/weierstrass.hpp"

#include <algorithm>

#include <cctype>

namespace k3fib {

bool is_squarefree(long d) {
    if (d == 0) return false;
    long m = d < 0 ? -d : d;
    for (long p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

QuadExtScalar::QuadExtScalar(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (!is_squarefree(d)) throw DomainError("sqrt parameter must be square-free and nonzero, got " + std::to_string(d));
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

long QuadExtScalar::common(long d1, long d2) {
    if (d1 == 1) return d2;
    if (d2 == 1 || d1 == d2) return d1;
    throw DomainError("incompatible quadratic extensions sqrt(" + std::to_string(d1) + ") and sqrt(" +
                      std::to_string(d2) + ")");
}

QuadExtScalar QuadExtScalar::operator+(const QuadExtScalar& o) const {
    return {a_ + o.a_, b_ + o.b_, common(d_, o.d_)};
}

QuadExtScalar QuadExtScalar::operator-(const QuadExtScalar& o) const {
    return {a_ - o.a_, b_ - o.b_, common(d_, o.d_)};
}

QuadExtScalar QuadExtScalar::operator-() const { return {-a_, -b_, d_}; }

QuadExtScalar QuadExtScalar::operator*(const QuadExtScalar& o) const {
    long d = common(d_, o.d_);
    return {a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d};
}

QuadExtScalar QuadExtScalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    Rat n = a_ * a_ - b_ * b_ * d_;
    return {a_ / n, -b_ / n, d_};
}

bool QuadExtScalar::operator==(const QuadExtScalar& o) const { return a_ == o.a_ && b_ == o.b_; }

std::string QuadExtScalar::str() const {
    if (b_ == 0) return to_string(a_);
    std::string rb = b_ == 1 ? "r" : b_ == -1 ? "-r" : to_string(b_) + "*r";
    if (a_ == 0) return rb;
    std::string s = to_string(a_);
    s += b_ < 0 ? "" : "+";
    return "(" + s + rb + ")";
}

Poly::Poly(QuadExtScalar c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<QuadExtScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return Poly({QuadExtScalar(0), QuadExtScalar(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<QuadExtScalar> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] = r[i] + c_[i];
        if (i < o.c_.size()) r[i] = r[i] + o.c_[i];
    }
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<QuadExtScalar> r;
    for (const auto& c : c_) r.push_back(-c);
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<QuadExtScalar> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::pow(unsigned e) const {
    Poly r(QuadExtScalar(1)), b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (o.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<QuadExtScalar> q(std::max(0, degree() - o.degree() + 1));
    Poly r = *this;
    QuadExtScalar inv = o.lead().inverse();
    while (!r.is_zero() && r.degree() >= o.degree()) {
        int k = r.degree() - o.degree();
        QuadExtScalar f = r.lead() * inv;
        q[k] = f;
        std::vector<QuadExtScalar> m(k + 1);
        m[k] = f;
        r = r - o * Poly(std::move(m));
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * Poly(lead().inverse());
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const auto& c = c_[k];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        std::string mono = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
        std::string term;
        if (mono.empty()) term = cs;
        else if (cs == "1") term = mono;
        else term = cs + "*" + mono;
        if (s.empty()) s = neg ? "-" + term : term;
        else s += (neg ? " - " : " + ") + term;
    }
    return s;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(QuadExtScalar(1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(QuadExtScalar(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    num_ = num.divmod(g).first;
    den_ = den.divmod(g).first;
    Poly s(den_.lead().inverse());
    num_ = num_ * s;
    den_ = den_ * s;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}
RatFunc RatFunc::operator-() const { return {-num_, den_}; }
RatFunc RatFunc::operator*(const RatFunc& o) const { return {num_ * o.num_, den_ * o.den_}; }
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DomainError("division by zero rational function");
    return {num_ * o.den_, den_ * o.num_};
}

std::string RatFunc::str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool FFPoint::operator==(const FFPoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
}

std::string FFPoint::str() const {
    if (infinity) return "O";
    return "(" + x.str() + ", " + y.str() + ")";
}

FFCurve::FFCurve(RatFunc a4, RatFunc a6) : a4_(std::move(a4)), a6_(std::move(a6)) {
    if (discriminant().is_zero()) throw DomainError("singular Weierstrass model: discriminant vanishes");
}

RatFunc FFCurve::discriminant() const {
    RatFunc four(Poly(QuadExtScalar(4))), twenty7(Poly(QuadExtScalar(27))), m16(Poly(QuadExtScalar(-16)));
    return m16 * (four * a4_ * a4_ * a4_ + twenty7 * a6_ * a6_);
}

bool FFCurve::on_curve(const FFPoint& p) const {
    if (p.infinity) return true;
    return p.y * p.y == p.x * p.x * p.x + a4_ * p.x + a6_;
}

void FFCurve::require(const FFPoint& p) const {
    if (!on_curve(p)) throw DomainError("point " + p.str() + " is not on the curve");
}

FFPoint FFCurve::negate(const FFPoint& p) const {
    require(p);
    if (p.infinity) return p;
    return FFPoint::affine(p.x, -p.y);
}

FFPoint FFCurve::add(const FFPoint& p, const FFPoint& q) const {
    require(p);
    require(q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    RatFunc lambda;
    if (p.x == q.x) {
        if (p.y == -q.y) return FFPoint::at_infinity();
        RatFunc three(Poly(QuadExtScalar(3))), two(Poly(QuadExtScalar(2)));
        lambda = (three * p.x * p.x + a4_) / (two * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    RatFunc x3 = lambda * lambda - p.x - q.x;
    RatFunc y3 = lambda * (p.x - x3) - p.y;
    return FFPoint::affine(std::move(x3), std::move(y3));
}

FFPoint FFCurve::scalar_mul(long n, const FFPoint& p) const {
    require(p);
    FFPoint base = n < 0 ? negate(p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
    FFPoint acc = FFPoint::at_infinity();
    for (; k; k >>= 1) {
        if (k & 1) acc = add(acc, base);
        if (k > 1) base = add(base, base);
    }
    return acc;
}

std::optional<int> FFCurve::torsion_order(const FFPoint& p, int bound) const {
    require(p);
    // On an integral model of weight n (deg a4 <= 4n, deg a6 <= 6n) torsion sections have
    // polynomial coordinates with deg x <= 2n and deg y <= 3n, so any other multiple
    // proves infinite order.
    const bool integral = a4_.den().degree() == 0 && a6_.den().degree() == 0;
    const int n = std::max((std::max(a4_.num().degree(), 0) + 3) / 4, (std::max(a6_.num().degree(), 0) + 5) / 6);
    auto escapes = [&](const FFPoint& q) {
        return q.x.den().degree() > 0 || q.y.den().degree() > 0 || q.x.num().degree() > 2 * n ||
               q.y.num().degree() > 3 * n;
    };
    FFPoint q = p;
    for (int k = 1; k <= bound; ++k) {
        if (q.infinity) return k;
        if (integral && escapes(q)) return std::nullopt;
        q = add(q, p);
    }
    return std::nullopt;
}

namespace {

class ExprParser {
public:
    ExprParser(const std::string& s, long d) : s_(s), d_(d) {}

    Poly parse() {
        Poly p = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("expression '" + s_ + "': " + what + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Poly sum() {
        Poly p = product();
        for (;;) {
            if (eat('+')) p = p + product();
            else if (eat('-')) p = p - product();
            else return p;
        }
    }
    Poly product() {
        Poly p = unary();
        while (eat('*')) p = p * unary();
        return p;
    }
    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Poly power() {
        Poly b = atom();
        if (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            std::string digits = s_.substr(start, pos_ - start);
            if (digits.size() > 4) fail("exponent too large");
            b = b.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return b;
    }
    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 't') {
            ++pos_;
            return Poly::t();
        }
        if (c == 'r') {
            ++pos_;
            if (d_ == 1) fail("'r' used without a square root");
            return Poly(QuadExtScalar(0, 1, d_));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly(QuadExtScalar(Rat(Int(s_.substr(start, pos_ - start)))));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    long d_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& expr, long sqrt_d) {
    if (!is_squarefree(sqrt_d)) throw DomainError("sqrt parameter must be square-free and nonzero");
    return ExprParser(expr, sqrt_d).parse();
}

}  // namespace k3fib
