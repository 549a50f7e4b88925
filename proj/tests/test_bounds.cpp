#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include <minertia/bounds.hpp>

using namespace minertia;

namespace {

const BoundEntry& entry(const BoundReport& r, const std::string& name) {
    auto it = std::find_if(r.bounds.begin(), r.bounds.end(), [&](const BoundEntry& e) { return e.name == name; });
    EXPECT_NE(it, r.bounds.end()) << name;
    return *it;
}

ErrorKind error_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Inconsistency;
}

} // namespace

TEST(Bounds, ClosedForms) {
    EXPECT_EQ(bmy_bound(3, 4), 8);
    EXPECT_EQ(general_bound(4), 10);
    EXPECT_EQ(odd_q_bound(7, true), 20);
    EXPECT_EQ(odd_q_bound(7, false), std::nullopt);
    EXPECT_EQ(odd_q_bound(6, true), std::nullopt);
    EXPECT_EQ(theorem_bound(5, true), 17);
    EXPECT_EQ(theorem_bound(9, true), 33);
    EXPECT_EQ(theorem_bound(3, true), 9);
    EXPECT_EQ(theorem_bound(6, true), std::nullopt);
    EXPECT_EQ(theorem_bound(5, false), std::nullopt);
    EXPECT_EQ(epsilon_bound(6, true), 17);
    EXPECT_EQ(epsilon_bound(7, true), 17);
    EXPECT_EQ(epsilon_bound(10, true), 33);
    EXPECT_EQ(epsilon_bound(9, true), std::nullopt);
    EXPECT_EQ(epsilon_bound(6, false), std::nullopt);
}

TEST(Bounds, PencilBound) {
    EXPECT_EQ(pencil_bound(4, {2, {}}), 10);
    EXPECT_EQ(pencil_bound(5, {2, {3, 2}}), 17);
    EXPECT_EQ(pencil_bound(5, {1, {}}), 10);
    EXPECT_EQ(error_of([] { pencil_bound(3, {4, {}}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { pencil_bound(3, {0, {}}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { pencil_bound(3, {1, {0}}); }), ErrorKind::InvalidInput);
}

TEST(BestBound, PowerOfTwoPlusOneWins) {
    Assumptions a;
    a.q = 5;
    a.no_irregular_pencils_genus_ge2 = true;
    const BoundReport r = best_bound(a);
    EXPECT_EQ(r.best, 17);
    EXPECT_EQ(r.best_names, std::vector<std::string>{bound_names::kPowerOfTwo});
    EXPECT_NE(entry(r, bound_names::kPowerOfTwo).provenance.find("known previously"), std::string::npos);
    EXPECT_EQ(entry(r, bound_names::kOddQ).value, 14);
    EXPECT_FALSE(entry(r, bound_names::kBmy).applicable);

    a.q = 9;
    EXPECT_EQ(best_bound(a).best, 33);
    EXPECT_EQ(entry(best_bound(a), bound_names::kPowerOfTwo).provenance.find("known previously"), std::string::npos);
}

TEST(BestBound, WithoutAssumptionsOnlyGeneralAndBmy) {
    Assumptions a;
    a.q = 5;
    a.p_g = 20;
    const BoundReport r = best_bound(a);
    EXPECT_EQ(r.best, 26);
    EXPECT_EQ(r.best_names, std::vector<std::string>{bound_names::kBmy});
    EXPECT_FALSE(entry(r, bound_names::kPowerOfTwo).applicable);
    EXPECT_FALSE(entry(r, bound_names::kOddQ).applicable);
    EXPECT_EQ(r.bounds.size(), 6u);
}

TEST(BestBound, TiesListEveryName) {
    Assumptions a;
    a.q = 4;
    a.p_g = 5;
    const BoundReport r = best_bound(a);
    EXPECT_EQ(r.best, 10);
    EXPECT_EQ(r.best_names, (std::vector<std::string>{bound_names::kBmy, bound_names::kGeneralType}));
}

TEST(BestBound, MonotoneInQUnderFixedAssumptions) {
    long prev = 0;
    for (long q = 1; q <= 200; ++q) {
        Assumptions a;
        a.q = q;
        const long b = best_bound(a).best;
        EXPECT_GE(b, prev);
        prev = b;
    }
}

TEST(BestBound, NeverBelowGeneralBound) {
    for (long q = 1; q <= 300; ++q)
        for (bool np : {false, true}) {
            Assumptions a;
            a.q = q;
            a.no_irregular_pencils_genus_ge2 = np;
            const BoundReport r = best_bound(a);
            EXPECT_GE(r.best, general_bound(q));
            if (np && detail::is_power_of_two_plus_one(q) && q >= 3) {
                EXPECT_EQ(r.best, 4 * q - 3);
            }
        }
}

TEST(Validate, RejectsContradictions) {
    Assumptions a;
    a.q = 5;
    a.no_irregular_pencils_genus_ge2 = true;
    a.pencil = PencilData{2, {}};
    EXPECT_EQ(error_of([&] { best_bound(a); }), ErrorKind::InvalidInput);
    a.pencil = PencilData{1, {2}};
    EXPECT_EQ(best_bound(a).best, 17);
    a.q = 0;
    EXPECT_EQ(error_of([&] { validate(a); }), ErrorKind::InvalidInput);
    Assumptions neg;
    neg.q = 3;
    neg.p_g = -1;
    EXPECT_EQ(error_of([&] { validate(neg); }), ErrorKind::InvalidInput);
}

TEST(SurfaceIdentities, Examples) {
    EXPECT_EQ(surface_identities(5, 10, 25), (SurfaceInvariants{6, 27, 45}));
    EXPECT_EQ(surface_identities(4, 5, 12), (SurfaceInvariants{2, 8, 16}));
    EXPECT_EQ(surface_identities(9, 15, 33), (SurfaceInvariants{7, 29, 55}));
    EXPECT_EQ(error_of([] { surface_identities(-1, 0, 0); }), ErrorKind::InvalidInput);
}

TEST(K2Chi, ChainForPowersOfTwoPlusOne) {
    const K2ChiCheck c = k2_chi_check(9);
    EXPECT_EQ(c.chi, 7);
    EXPECT_EQ(c.K2_upper, 55);
    EXPECT_EQ(c.eight_chi, 56);
    EXPECT_TRUE(c.strict);
    for (long k = 3; k <= 20; ++k) {
        const long q = (1L << k) + 1;
        const K2ChiCheck ck = k2_chi_check(q);
        EXPECT_EQ(ck.K2_upper, 8 * q - 17);
        EXPECT_EQ(ck.eight_chi, 8 * q - 16);
    }
    EXPECT_EQ(error_of([] { k2_chi_check(5); }), ErrorKind::HypothesisNotMet);
    EXPECT_EQ(error_of([] { k2_chi_check(10); }), ErrorKind::HypothesisNotMet);
}

TEST(Catalog, ConsistentWithBounds) {
    const auto cat = catalog();
    EXPECT_EQ(cat.size(), 6u);
    for (const SurfaceRecord& s : cat) {
        Assumptions a;
        a.q = s.q;
        a.p_g = s.p_g;
        a.no_irregular_pencils_genus_ge2 = s.no_irregular_pencils;
        EXPECT_GE(s.h11, best_bound(a).best) << s.name;
        if (s.p_g) {
            EXPECT_GE(*s.p_g, 2 * s.q - 4) << s.name;
        }
    }
    EXPECT_EQ(product_family_record(4).h11, 10);
    EXPECT_EQ(product_family_record(6).p_g, 8);
    EXPECT_EQ(error_of([] { product_family_record(3); }), ErrorKind::InvalidInput);
}
