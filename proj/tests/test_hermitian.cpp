#include <gtest/gtest.h>

#include <minertia/inertia.hpp>
#include <minertia/selfcheck.hpp>

using namespace minertia;

namespace {

Rational r(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
const GaussianRational I = GaussianRational::i();

template <typename Fn>
ErrorKind error_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Inconsistency;
}

} // namespace

TEST(HermitianMatrix, ConstructionValidatesConjugateSymmetry) {
    EXPECT_EQ(error_of([] { HermitianMatrix({{0, I}, {I, 0}}); }), ErrorKind::NotHermitian);
    EXPECT_EQ(error_of([] { HermitianMatrix({{I, 0}, {0, 1}}); }), ErrorKind::NotHermitian);
    EXPECT_EQ(error_of([] { HermitianMatrix(ComplexMatrix(2, 3)); }), ErrorKind::NotHermitian);
    try {
        HermitianMatrix({{1, 2, 0}, {2, 1, 0}, {5, 0, 1}});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("(0,2)"), std::string::npos) << e.what();
    }
}

TEST(Inertia, Examples) {
    EXPECT_EQ(inertia(HermitianMatrix::identity(3)), (Inertia{3, 0, 0}));
    EXPECT_EQ(minimal_inertia(HermitianMatrix::identity(3)), 0u);

    const HermitianMatrix d = HermitianMatrix::diagonal({1, -1, 0});
    EXPECT_EQ(inertia(d), (Inertia{1, 1, 1}));
    EXPECT_EQ(minimal_inertia(d), 1u);

    // Characteristic polynomial x^2 - 1.
    const HermitianMatrix s({{0, I}, {-I, 0}});
    EXPECT_EQ(characteristic_polynomial(s), RationalPolynomial({r(-1), r(0), r(1)}));
    EXPECT_EQ(inertia(s), (Inertia{1, 1, 0}));

    EXPECT_EQ(minimal_inertia(HermitianMatrix::diagonal({1, 1, -1, -1, 0})), 2u);
    EXPECT_EQ(rank(HermitianMatrix::zero(4)), 0u);
    EXPECT_EQ(inertia(HermitianMatrix::zero(4)), (Inertia{0, 0, 4}));
    EXPECT_EQ(rank(HermitianMatrix::diagonal({1, -1, 0, 0})), 2u);
}

TEST(Inertia, ZeroDiagonalNeedsOffDiagonalStep) {
    // Purely imaginary off-diagonal entries force the c = i congruence.
    const HermitianMatrix x({{0, I, 0}, {-I, 0, 2 * I}, {0, -2 * I, 0}});
    EXPECT_EQ(inertia(x), check::descartes_inertia(x));
    EXPECT_EQ(inertia(x), (Inertia{1, 1, 1}));

    const HermitianMatrix y({{0, r(1, 2), 0, 0}, {r(1, 2), 0, 0, 0}, {0, 0, 0, I}, {0, 0, -I, 0}});
    EXPECT_EQ(inertia(y), (Inertia{2, 2, 0}));
}

TEST(Inertia, PsdAndScalingRemarks) {
    check::Generator gen(3);
    for (int t = 0; t < 100; ++t) {
        const HermitianMatrix psd = gen.psd_rank_le2(5);
        EXPECT_EQ(minimal_inertia(psd), 0u);
        EXPECT_EQ(minimal_inertia(-psd), 0u);
        const HermitianMatrix x = gen.hermitian(4);
        const Rational lambda = gen.nonzero_rational();
        EXPECT_EQ(minimal_inertia(lambda * x), minimal_inertia(x));
    }
}

TEST(Inertia, PropertiesOnRandomMatrices) {
    check::Generator gen(17);
    for (int t = 0; t < 400; ++t) {
        const auto q = static_cast<std::size_t>(gen.uniform_int(1, 6));
        const HermitianMatrix x = gen.hermitian(q);
        const Inertia in = inertia(x);
        EXPECT_EQ(in.q(), q);
        EXPECT_EQ(rank(x), in.rank());
        EXPECT_GE(in.rank(), 2 * in.minimal());
        EXPECT_EQ(inertia(-x), in.negated());
        EXPECT_EQ(in.minimal() == 0, check::psd_by_minors(x) || check::psd_by_minors(-x));
        EXPECT_EQ(in, check::descartes_inertia(x));
    }
}

TEST(CharacteristicPolynomial, AgreesWithInterpolationRoute) {
    check::Generator gen(23);
    for (int t = 0; t < 100; ++t) {
        const HermitianMatrix x = gen.hermitian(static_cast<std::size_t>(gen.uniform_int(1, 6)));
        EXPECT_EQ(characteristic_polynomial(x), check::interpolated_characteristic_polynomial(x));
    }
}

TEST(CongruenceTransform, Examples) {
    check::Generator gen(29);
    const HermitianMatrix x = gen.hermitian(4);
    EXPECT_EQ(congruence_transform(x, ComplexMatrix::identity(4)), x);
    const ComplexMatrix two = GaussianRational(2) * ComplexMatrix::identity(4);
    EXPECT_EQ(congruence_transform(x, two), Rational(4) * x);
    EXPECT_EQ(inertia(congruence_transform(x, two)), inertia(x));
}

TEST(CongruenceTransform, PreservesInertia) {
    check::Generator gen(31);
    for (int t = 0; t < 200; ++t) {
        const auto q = static_cast<std::size_t>(gen.uniform_int(1, 5));
        const HermitianMatrix x = gen.hermitian(q);
        EXPECT_EQ(inertia(congruence_transform(x, gen.invertible(q))), inertia(x));
    }
}

TEST(CongruenceTransform, RejectsSingularOrMisshapenTransforms) {
    const HermitianMatrix x = HermitianMatrix::identity(2);
    EXPECT_EQ(error_of([&] { congruence_transform(x, ComplexMatrix({{1, 2}, {2, 4}})); }),
              ErrorKind::SingularTransform);
    EXPECT_EQ(error_of([&] { congruence_transform(x, ComplexMatrix::identity(3)); }), ErrorKind::InvalidInput);
}
