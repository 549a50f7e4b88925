#include <gtest/gtest.h>

#include <map>

#include <minertia/polynomial.hpp>
#include <minertia/rational.hpp>
#include <minertia/selfcheck.hpp>

using namespace minertia;

namespace {

Rational r(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// (x - root)^mult over all entries, expanded naively.
RationalPolynomial from_roots(const std::map<long, std::size_t>& roots) {
    RationalPolynomial p({Rational(1)});
    for (auto [root, mult] : roots)
        for (std::size_t k = 0; k < mult; ++k) p = p * RationalPolynomial({Rational(-root), Rational(1)});
    return p;
}

} // namespace

TEST(Rational, ReducesAndPrints) {
    EXPECT_EQ(r(6, -4).to_string(), "-3/2");
    EXPECT_EQ(r(4, 2).to_string(), "2");
    EXPECT_EQ(Rational::parse("10/4"), r(5, 2));
    EXPECT_EQ(Rational::parse("-7"), r(-7));
    EXPECT_EQ(Rational::parse("+3/9").to_string(), "1/3");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/", "/2", "a", "1.5", "1/-2", "--1"}) {
        try {
            Rational::parse(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidInput) << bad;
        }
    }
    try {
        Rational::parse("3/0");
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivideByZero);
    }
}

TEST(Rational, ApproximationRespectsCap) {
    EXPECT_EQ(approximate(0.5, 16), r(1, 2));
    EXPECT_EQ(approximate(-0.75, 16), r(-3, 4));
    EXPECT_EQ(approximate(3.14159265358979, 7), r(22, 7));
    EXPECT_EQ(approximate(3.14159265358979, 113), r(355, 113));
    const Rational a = approximate(0.123456789, 1 << 16);
    EXPECT_LE(a.denominator(), BigInt(1 << 16));
    EXPECT_NEAR(a.to_double(), 0.123456789, 1e-8);
}

TEST(GaussianRational, ExamplesFromHandExpansion) {
    const GaussianRational z(r(1, 2), r(1, 3));
    EXPECT_EQ(gaussian_arith(z, z.conj(), GaussianOp::Mul), GaussianRational(r(13, 36), r(0)));
    EXPECT_EQ(gaussian_arith(z, GaussianRational(1), GaussianOp::Mul), z);
    EXPECT_EQ(gaussian_arith(gaussian_arith(z, {}, GaussianOp::Conj), {}, GaussianOp::Conj), z);
    EXPECT_EQ(gaussian_arith(z, z, GaussianOp::Div), GaussianRational(1));
    EXPECT_EQ(gaussian_arith(z, z, GaussianOp::Sub), GaussianRational());
}

TEST(GaussianRational, DivisionByZeroThrows) {
    try {
        gaussian_arith(GaussianRational(1), GaussianRational(), GaussianOp::Div);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivideByZero);
    }
}

TEST(GaussianRational, FieldPropertiesOnRandomValues) {
    check::Generator gen(11);
    for (int t = 0; t < 500; ++t) {
        GaussianRational a = gen.gaussian(), b = gen.gaussian(), c = gen.gaussian();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        GaussianRational n = a * a.conj();
        EXPECT_TRUE(n.im().is_zero());
        EXPECT_GE(n.re(), Rational(0));
        EXPECT_EQ(n.re(), a.norm2());
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(PolyGcdTower, HandDerivedExamples) {
    const RationalPolynomial p = from_roots({{1, 3}, {2, 1}});
    EXPECT_EQ(poly_gcd_tower(p, 2), RationalPolynomial({r(-1), r(1)}));
    EXPECT_EQ(poly_gcd_tower(RationalPolynomial({r(-5), r(1)}), 0), RationalPolynomial({r(-5), r(1)}));
    EXPECT_EQ(poly_gcd_tower(from_roots({{1, 1}, {2, 1}}), 1), RationalPolynomial({r(1)}));
}

TEST(PolyGcdTower, ZeroPolynomialIsInvalid) {
    try {
        poly_gcd_tower(RationalPolynomial{}, 1);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
}

TEST(PolyGcdTower, MatchesMultiplicityOracleOnRandomRootSets) {
    // Oracle: the tower at depth d is prod (x - r)^(mult - d) over roots with mult > d.
    check::Generator gen(5);
    for (int t = 0; t < 200; ++t) {
        std::map<long, std::size_t> roots;
        const long count = gen.uniform_int(1, 4);
        for (long k = 0; k < count; ++k) roots[gen.uniform_int(-5, 5)] += static_cast<std::size_t>(gen.uniform_int(1, 4));
        RationalPolynomial p = from_roots(roots);
        const Rational scale = gen.nonzero_rational();
        p = RationalPolynomial({scale}) * p;
        const auto depth = static_cast<std::size_t>(gen.uniform_int(0, 4));

        std::map<long, std::size_t> expected;
        for (auto [root, mult] : roots)
            if (mult > depth) expected[root] = mult - depth;
        const RationalPolynomial g = poly_gcd_tower(p, depth);
        EXPECT_EQ(g, from_roots(expected)) << p.to_string() << " depth " << depth;

        // g divides p and vanishes only at roots of p.
        EXPECT_TRUE(divmod(p, g).second.is_zero());
        for (auto [root, mult] : expected) EXPECT_TRUE(p(Rational(root)).is_zero());
    }
}

TEST(Polynomial, GcdOfNonMonicRationalInputs) {
    // (x - 1/2)(x + 3) and (x - 1/2)(2x - 7)
    const RationalPolynomial a = RationalPolynomial({r(-1, 2), r(1)}) * RationalPolynomial({r(3), r(1)});
    const RationalPolynomial b = RationalPolynomial({r(-1, 2), r(1)}) * RationalPolynomial({r(-7), r(2)});
    EXPECT_EQ(gcd(a, b), RationalPolynomial({r(-1, 2), r(1)}));
    EXPECT_EQ(gcd(a, RationalPolynomial{}), a.monic());
}

TEST(Polynomial, SignVariationsSkipZeros) {
    EXPECT_EQ(sign_variations(RationalPolynomial({r(-1), r(0), r(1)})), 1u);
    EXPECT_EQ(sign_variations(RationalPolynomial({r(1), r(-2), r(0), r(1)})), 2u);
    EXPECT_EQ(sign_variations(RationalPolynomial{}), 0u);
}
