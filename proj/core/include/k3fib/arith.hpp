#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace k3fib {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Raised for mathematically invalid input or results (CLI exit code 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(const Int& v);
std::string to_string(const Rat& v);
std::string to_string(const IntVec& v);

Rat make_rat(long num, long den = 1);

// q reduced into [0, 2).
Rat mod2(const Rat& q);
// q reduced into [0, 1).
Rat mod1(const Rat& q);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
// Nearest integer to a/b, ties rounded towards +infinity.
Int round_div(const Int& a, const Int& b);
Int isqrt(const Int& a);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
bool is_integer(const Rat& q);

long to_long(const Int& v);

}  // namespace k3fib
