// Exact-arithmetic foundations: rationals, matrices over ℤ/ℚ, integer
// polynomials, and the truncated ring ℚ[P]/(P^m).

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hginv/matrix.hpp"
#include "hginv/nilpotent.hpp"
#include "hginv/polynomial.hpp"
#include "hginv/rational.hpp"

using namespace hginv;

namespace {

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -9,
                            int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(dist(rng));
    return m;
}

// Companion matrix of the monic polynomial T^Q + A_1 T^{Q-1} + ... + A_Q:
// ones on the first subdiagonal, last column = (-A_Q, ..., -A_1) top to bottom.
IntMatrix companion(const IntPoly& p) {
    const std::size_t q = p.degree();
    IntMatrix h(q, q);
    for (std::size_t i = 1; i < q; ++i) h(i, i - 1) = 1;
    for (std::size_t i = 0; i < q; ++i) h(i, q - 1) = -p[i];
    return h;
}

}  // namespace

TEST(Rational, ParseAndPrintRoundTrip) {
    EXPECT_EQ(parse_rat("3/4"), Rat(3, 4));
    EXPECT_EQ(parse_rat("-12"), Rat(-12));
    EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));     // canonicalized
    EXPECT_EQ(parse_rat("5/-10"), Rat(-1, 2));  // sign moves to the numerator
    EXPECT_EQ(to_string(Rat(3, 2)), "3/2");
    EXPECT_EQ(to_string(Rat(-4, 2)), "-2");
    EXPECT_THROW(parse_rat(""), std::invalid_argument);
    EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rat("x"), std::invalid_argument);
}

TEST(Rational, IntegerHelpers) {
    EXPECT_EQ(factorial(0), Int(1));
    EXPECT_EQ(factorial(6), Int(720));
    EXPECT_EQ(factorial(20), Int("2432902008176640000"));
    EXPECT_EQ(int_gcd(Int(12), Int(-18)), Int(6));
    EXPECT_EQ(int_lcm(Int(4), Int(6)), Int(12));
    EXPECT_EQ(int_pow(Int(3), 5), Int(243));
    EXPECT_TRUE(is_integral(make_rat(Int(8), Int(4))));
    EXPECT_FALSE(is_integral(Rat(1, 3)));
    EXPECT_EQ(make_rat(Int(8), Int(4)), Rat(2));
    EXPECT_EQ(make_rat(Int(3), Int(-6)), Rat(-1, 2));
    EXPECT_THROW(make_rat(Int(1), Int(0)), std::invalid_argument);
}

TEST(Matrix, MultiplyBasics) {
    IntMatrix id = IntMatrix::identity(3);
    std::mt19937 rng(7);
    IntMatrix m = random_int_matrix(rng, 3, 3);
    EXPECT_EQ(matmul(id, m), m);
    EXPECT_EQ(matmul(m, id), m);

    IntMatrix a(1, 1);
    a(0, 0) = 7;
    IntMatrix b(1, 1);
    b(0, 0) = -3;
    EXPECT_EQ(matmul(a, b)(0, 0), Int(-21));

    // Square of the companion of T^2 - 1 is the identity.
    IntPoly t2m1({Int(-1), Int(0), Int(1)});
    IntMatrix c = companion(t2m1);
    EXPECT_EQ(matmul(c, c), IntMatrix::identity(2));
}

TEST(Matrix, MultiplyIsAssociative) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a = random_int_matrix(rng, 3, 4);
        IntMatrix b = random_int_matrix(rng, 4, 2);
        IntMatrix c = random_int_matrix(rng, 2, 5);
        EXPECT_EQ(matmul(matmul(a, b), c), matmul(a, matmul(b, c)));
    }
}

TEST(Matrix, InverseRoundTrip) {
    RatMatrix a(2, 2);
    a(0, 0) = Rat(1, 2);
    a(0, 1) = Rat(3);
    a(1, 0) = Rat(-1);
    a(1, 1) = Rat(4, 3);
    RatMatrix inv = inverse(a);
    EXPECT_EQ(matmul(a, inv), RatMatrix::identity(2));
    EXPECT_EQ(matmul(inv, a), RatMatrix::identity(2));

    RatMatrix sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    EXPECT_THROW(inverse(sing), std::domain_error);
}

TEST(Matrix, InverseUnimodular) {
    IntMatrix u(2, 2);
    u(0, 0) = 1;
    u(0, 1) = 2;
    u(1, 0) = 3;
    u(1, 1) = 7;  // det = 1
    IntMatrix inv = inverse_unimodular(u);
    EXPECT_EQ(matmul(u, inv), IntMatrix::identity(2));
    EXPECT_EQ(inv(0, 0), Int(7));
    EXPECT_EQ(inv(0, 1), Int(-2));

    IntMatrix bad(1, 1);
    bad(0, 0) = 2;  // inverse is 1/2, not integral
    EXPECT_THROW(inverse_unimodular(bad), std::domain_error);
}

TEST(Matrix, KernelKnownCases) {
    // Zero 2x2 map: kernel is the whole plane.
    RatMatrix zero(2, 2);
    EXPECT_EQ(kernel_basis(zero).size(), 2u);

    // Identity: trivial kernel.
    EXPECT_TRUE(kernel_basis(RatMatrix::identity(4)).empty());

    // Rank-1 matrix [[1,2],[2,4]]: kernel spanned by (-2, 1).
    RatMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    auto basis = kernel_basis(m);
    ASSERT_EQ(basis.size(), 1u);
    const auto& v = basis[0];
    ASSERT_NE(v[1], Rat(0));
    EXPECT_EQ(v[0] / v[1], Rat(-2));
}

TEST(Matrix, KernelPropertyRandomized) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> dims(1, 6);
        std::size_t rows = dims(rng), cols = dims(rng);
        IntMatrix mi = random_int_matrix(rng, rows, cols, -4, 4);
        // Half the time, force rank deficiency by duplicating a row.
        if (rows >= 2 && trial % 2 == 0)
            for (std::size_t j = 0; j < cols; ++j) mi(rows - 1, j) = mi(0, j);
        RatMatrix m = mi.cast<Rat>();
        auto basis = kernel_basis(m);
        EXPECT_EQ(basis.size() + rank(m), cols);
        for (const auto& v : basis) {
            bool nonzero = false;
            for (std::size_t i = 0; i < rows; ++i) {
                Rat s(0);
                for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
                EXPECT_EQ(s, Rat(0));
            }
            for (const Rat& x : v) nonzero = nonzero || x != 0;
            EXPECT_TRUE(nonzero);
        }
    }
}

TEST(Matrix, RankExamples) {
    EXPECT_EQ(rank(IntMatrix::identity(5)), 5u);
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Int(static_cast<long>(i + j));
    EXPECT_EQ(rank(m), 2u);  // rows are arithmetic progressions
}

TEST(Matrix, CharpolyOfCompanionRecoversPolynomial) {
    // The companion matrix of ∏(T^{d_k} - 1) must have exactly that
    // characteristic polynomial.
    for (const auto& degrees : std::vector<std::vector<int>>{{5}, {2, 4}, {3, 3}, {2, 2, 2}}) {
        IntPoly p = prod_power_minus_one(degrees);
        IntMatrix h = companion(p);
        std::vector<Rat> cp = charpoly(h);
        ASSERT_EQ(cp.size(), p.degree() + 1);
        for (std::size_t i = 0; i <= p.degree(); ++i) EXPECT_EQ(cp[i], Rat(p[i]));
    }
}

TEST(Matrix, CharpolySmallCases) {
    // identity(2): (T-1)^2 = T^2 - 2T + 1.
    std::vector<Rat> cp = charpoly(RatMatrix::identity(2));
    ASSERT_EQ(cp.size(), 3u);
    EXPECT_EQ(cp[0], Rat(1));
    EXPECT_EQ(cp[1], Rat(-2));
    EXPECT_EQ(cp[2], Rat(1));

    RatMatrix one(1, 1);
    one(0, 0) = Rat(5, 3);
    cp = charpoly(one);
    ASSERT_EQ(cp.size(), 2u);
    EXPECT_EQ(cp[0], Rat(-5, 3));
    EXPECT_EQ(cp[1], Rat(1));
}

TEST(Polynomial, ProductOfPowerMinusOne) {
    // (x^2 - 1)(x^4 - 1) = x^6 - x^4 - x^2 + 1.
    IntPoly p = prod_power_minus_one({2, 4});
    std::vector<Int> want{Int(1), Int(0), Int(-1), Int(0), Int(-1), Int(0), Int(1)};
    EXPECT_EQ(p.coeffs(), want);
    EXPECT_THROW(prod_power_minus_one({0}), std::invalid_argument);
}

TEST(Polynomial, DivExact) {
    IntPoly x2m1({Int(-1), Int(0), Int(1)});
    IntPoly xm1({Int(-1), Int(1)});
    IntPoly xp1({Int(1), Int(1)});
    EXPECT_EQ(poly_divexact(x2m1, xm1), xp1);
    EXPECT_EQ(poly_divexact(x2m1, xp1), xm1);
    IntPoly x2p1({Int(1), Int(0), Int(1)});
    EXPECT_THROW(poly_divexact(x2p1, xm1), std::domain_error);
}

TEST(Polynomial, GcdKnownCases) {
    IntPoly xm1({Int(-1), Int(1)});

    // gcd(x^5 - 1, (x-1)^5) = x - 1.
    IntPoly x5m1 = prod_power_minus_one({5});
    IntPoly xm1_5 = poly_mul(poly_mul(poly_mul(poly_mul(xm1, xm1), xm1), xm1), xm1);
    EXPECT_EQ(poly_gcd(x5m1, xm1_5), xm1);

    // gcd(p, p) = p for a primitive p with positive leading coefficient.
    EXPECT_EQ(poly_gcd(x5m1, x5m1), x5m1);

    // gcd((x-1)^4, (x^2-1)^2) = (x-1)^2.
    IntPoly xm1_2 = poly_mul(xm1, xm1);
    IntPoly xm1_4 = poly_mul(xm1_2, xm1_2);
    IntPoly x2m1 = prod_power_minus_one({2});
    IntPoly x2m1_2 = poly_mul(x2m1, x2m1);
    EXPECT_EQ(poly_gcd(xm1_4, x2m1_2), xm1_2);
}

TEST(Polynomial, GcdDividesBothArguments) {
    // The gcd of products of (x^k - 1) must divide each argument exactly.
    std::vector<std::vector<int>> cases{{5}, {1, 1, 1, 1, 1}, {2, 4}, {1, 1, 2}, {6}};
    for (const auto& da : cases) {
        for (const auto& db : cases) {
            IntPoly a = prod_power_minus_one(da);
            IntPoly b = prod_power_minus_one(db);
            IntPoly g = poly_gcd(a, b);
            EXPECT_GT(g.leading(), 0);
            EXPECT_NO_THROW(poly_divexact(a, g));
            EXPECT_NO_THROW(poly_divexact(b, g));
        }
    }
}

TEST(Polynomial, ToStringReadable) {
    EXPECT_EQ(to_string(prod_power_minus_one({2})), "x^2 - 1");
    EXPECT_EQ(to_string(IntPoly()), "0");
    EXPECT_EQ(to_string(IntPoly({Int(3), Int(-2), Int(1)})), "x^2 - 2*x + 3");
}

TEST(Nilpotent, MultiplicationTruncates) {
    // (1 + P)^4 in Q[P]/(P^3) = 1 + 4P + 6P^2.
    NilPoly p = nil_linear(3, Rat(1), Rat(1));
    NilPoly pow = p * p * p * p;
    EXPECT_EQ(pow[0], Rat(1));
    EXPECT_EQ(pow[1], Rat(4));
    EXPECT_EQ(pow[2], Rat(6));
}

TEST(Nilpotent, InverseOfUnit) {
    // (2 + P)^{-1} = 1/2 - P/4 + P^2/8 - P^3/16.
    NilPoly a = nil_linear(4, Rat(1), Rat(2));
    NilPoly inv = nil_inverse(a);
    EXPECT_EQ(inv[0], Rat(1, 2));
    EXPECT_EQ(inv[1], Rat(-1, 4));
    EXPECT_EQ(inv[2], Rat(1, 8));
    EXPECT_EQ(inv[3], Rat(-1, 16));
    NilPoly prod = a * inv;
    EXPECT_EQ(prod, NilPoly(4, Rat(1)));

    NilPoly nonunit(3);
    nonunit[1] = Rat(1);  // P itself: no inverse
    EXPECT_THROW(nil_inverse(nonunit), std::domain_error);
}

TEST(Nilpotent, RingAxiomsSpotCheck) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-6, 6);
    auto rnd = [&](std::size_t ord) {
        NilPoly x(ord);
        for (std::size_t i = 0; i < ord; ++i)
            x[i] = make_rat(Int(dist(rng)), Int(1 + (dist(rng) & 3)));
        return x;
    };
    for (int trial = 0; trial < 10; ++trial) {
        NilPoly a = rnd(5), b = rnd(5), c = rnd(5);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
    }
}
