#include <gtest/gtest.h>

#include "k3fib/arith.hpp"
#include "k3fib/matrix.hpp"

using namespace k3fib;

TEST(Arith, RationalsAreCanonical) {
    EXPECT_EQ(to_string(make_rat(6, -4)), "-3/2");
    EXPECT_EQ(to_string(make_rat(8, 4)), "2");
    EXPECT_THROW(make_rat(1, 0), DomainError);
}

TEST(Arith, ModReduction) {
    EXPECT_EQ(mod2(make_rat(17, 9)), make_rat(17, 9));
    EXPECT_EQ(mod2(make_rat(-1, 9)), make_rat(17, 9));
    EXPECT_EQ(mod2(make_rat(26, 9)), make_rat(8, 9));
    EXPECT_EQ(mod1(make_rat(-1, 4)), make_rat(3, 4));
    EXPECT_EQ(mod1(Rat(3)), Rat(0));
}

TEST(Arith, IntegerDivisionRounding) {
    EXPECT_EQ(floor_div(Int(-7), Int(2)), Int(-4));
    EXPECT_EQ(ceil_div(Int(-7), Int(2)), Int(-3));
    EXPECT_EQ(floor_div(Int(7), Int(-2)), Int(-4));
    EXPECT_EQ(round_div(Int(5), Int(2)), Int(3));
    EXPECT_EQ(round_div(Int(-5), Int(2)), Int(-2));
    EXPECT_EQ(round_div(Int(-7), Int(3)), Int(-2));
}

TEST(Arith, SqrtGcdLcm) {
    EXPECT_EQ(isqrt(Int(0)), Int(0));
    EXPECT_EQ(isqrt(Int(99)), Int(9));
    EXPECT_EQ(isqrt(Int(100)), Int(10));
    EXPECT_EQ(gcd(Int(-12), Int(18)), Int(6));
    EXPECT_EQ(lcm(Int(4), Int(6)), Int(12));
    EXPECT_TRUE(is_integer(make_rat(4, 2)));
    EXPECT_FALSE(is_integer(make_rat(1, 2)));
}

TEST(Matrix, DeterminantOfCartanLikeMatrices) {
    IntMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    EXPECT_EQ(determinant(a), Int(4));
    IntMatrix s{{1, 2}, {2, 4}};
    EXPECT_EQ(determinant(s), Int(0));
    EXPECT_EQ(rank(s), 1);
    EXPECT_EQ(determinant(IntMatrix::identity(5)), Int(1));
}

TEST(Matrix, InverseRoundTrip) {
    IntMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    RatMatrix inv = inverse(to_rat(a));
    EXPECT_EQ(to_rat(a) * inv, RatMatrix::identity(3));
    EXPECT_EQ(inv(0, 0), make_rat(3, 4));
    EXPECT_THROW(inverse(to_rat(IntMatrix{{1, 2}, {2, 4}})), DomainError);
    EXPECT_THROW(to_int(inv), DomainError);
}

TEST(Matrix, BilinearAndGram) {
    IntMatrix g{{-2, 1}, {1, -2}};
    EXPECT_EQ(bilinear(g, IntVec{1, 1}, IntVec{1, 1}), Int(-2));
    IntMatrix b{{1, 0}, {1, 1}};
    IntMatrix gb = gram_of(b, g);
    EXPECT_EQ(gb, (IntMatrix{{-2, -1}, {-1, -2}}));
    EXPECT_TRUE(is_symmetric(gb));
    EXPECT_FALSE(is_symmetric(IntMatrix{{0, 1}, {0, 0}}));
}

TEST(Matrix, BlockDiagonal) {
    IntMatrix a{{2}};
    IntMatrix b{{2, -1}, {-1, 2}};
    IntMatrix d = block_diagonal(a, b);
    EXPECT_EQ(d.rows(), 3u);
    EXPECT_EQ(d(0, 0), Int(2));
    EXPECT_EQ(d(1, 2), Int(-1));
    EXPECT_EQ(d(0, 1), Int(0));
    EXPECT_EQ(determinant(d), Int(6));
}

TEST(Matrix, RaggedLiteralRejected) {
    EXPECT_THROW((IntMatrix{{1, 2}, {3}}), std::invalid_argument);
}
