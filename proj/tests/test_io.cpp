#include <gtest/gtest.h>

#include <minertia/io.hpp>
#include <minertia/selfcheck.hpp>

using namespace minertia;

namespace {

template <typename T>
T round_trip(const T& v) {
    return json::parse(json(v).dump()).get<T>();
}

ErrorKind parse_error_of(const std::string& text) {
    try {
        json::parse(text).get<HermitianMatrix>();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted " << text;
    return ErrorKind::Inconsistency;
}

} // namespace

TEST(Json, RationalAcceptsIntegersAndStrings) {
    EXPECT_EQ(json::parse("\"-3/6\"").get<Rational>(), Rational(BigInt(-1), BigInt(2)));
    EXPECT_EQ(json::parse("4").get<Rational>(), Rational(4));
    EXPECT_EQ(json(Rational(BigInt(5), BigInt(10))).dump(), "\"1/2\"");
}

TEST(Json, MatrixRoundTrip) {
    check::Generator gen(71);
    for (int t = 0; t < 100; ++t) {
        const HermitianMatrix x = gen.hermitian(static_cast<std::size_t>(gen.uniform_int(1, 6)));
        EXPECT_EQ(round_trip(x), x);
    }
}

TEST(Json, MatrixValidation) {
    EXPECT_EQ(parse_error_of(R"({"q":2,"entries":[[{"re":"1","im":"0"},{"re":"1","im":"1"}],
                                                [{"re":"1","im":"1"},{"re":"0","im":"0"}]]})"),
              ErrorKind::NotHermitian);
    EXPECT_EQ(parse_error_of(R"({"q":2,"entries":[[{"re":"1","im":"0"}]]})"), ErrorKind::InvalidInput);
    EXPECT_EQ(parse_error_of(R"({"q":0,"entries":[]})"), ErrorKind::InvalidInput);
    EXPECT_EQ(parse_error_of(R"({"q":1,"entries":[[{"re":"x","im":"0"}]]})"), ErrorKind::InvalidInput);
    EXPECT_EQ(parse_error_of(R"({"entries":[[{"re":"1","im":"0"}]]})"), ErrorKind::InvalidInput);
}

TEST(Json, InertiaChecksDerivedFields) {
    const Inertia in{2, 1, 3};
    EXPECT_EQ(round_trip(in), in);
    EXPECT_THROW(json::parse(R"({"n_plus":1,"n_minus":1,"n_zero":0,"rank":3})").get<Inertia>(), Error);
    EXPECT_THROW(json::parse(R"({"n_plus":2,"n_minus":1,"n_zero":0,"minimal_inertia":2})").get<Inertia>(), Error);
}

TEST(Json, ClassificationRoundTrip) {
    const Classification c{5, classify_d2(HermitianMatrix::diagonal({2, 1, 1, 1, 0})),
                           classify_cone(HermitianMatrix::diagonal({2, 1, 1, 1, 0}))};
    EXPECT_EQ(round_trip(c), c);
    const Classification d{3, classify_d2(HermitianMatrix::diagonal({1, -1, 0})), std::nullopt};
    EXPECT_EQ(round_trip(d), d);
    EXPECT_EQ(json(d).at("cone"), json(nullptr));
}

TEST(Json, DegreeAndBoundRoundTrip) {
    for (long q : {3L, 5L, 6L, 17L, 300L}) EXPECT_EQ(round_trip(parity_record(q)), parity_record(q));
    EXPECT_EQ(json(parity_record(5)).at("degree"), "175");
    EXPECT_EQ(json(parity_record(300)).at("degree"), json(nullptr));

    Assumptions a;
    a.q = 6;
    a.p_g = 9;
    a.pencil = PencilData{1, {2, 3}};
    a.minimal_surface = true;
    EXPECT_EQ(round_trip(a), a);
    EXPECT_EQ(round_trip(best_bound(a)), best_bound(a));
    for (const auto& s : catalog()) EXPECT_EQ(round_trip(s), s);
}

TEST(Json, SearchDocumentsRoundTrip) {
    SearchConfig cfg;
    cfg.seed = 4;
    cfg.samples = 32;
    const SearchReport r = search_report(random_subspace(5, 7, 4), cfg);
    ASSERT_TRUE(r.witness);
    const SearchReport back = parse_search_report(json::parse(search_report_json(r).dump()));
    EXPECT_EQ(back, r);
    EXPECT_EQ(search_report_json(back).dump(), search_report_json(r).dump());

    const GrowReport g = grow_subspace(5, 2, cfg, 2);
    const json gj = grow_report_json(g, cfg.seed);
    const GrowReport gb = parse_grow_report(json::parse(gj.dump()));
    EXPECT_EQ(gb.basis, g.basis);
    EXPECT_EQ(gb.steps, g.steps);
    EXPECT_EQ(gb.notes, g.notes);
    EXPECT_EQ(gb.dimension_limit, g.dimension_limit);
    EXPECT_EQ(grow_report_json(gb, cfg.seed), gj);
}

TEST(Json, BasisRejectsDependentMatrices) {
    const HermitianMatrix a = HermitianMatrix::identity(2);
    json j = json{{"q", 2}, {"basis", {a, a}}};
    EXPECT_THROW(parse_basis(j), Error);
    j["basis"] = {a};
    EXPECT_EQ(parse_basis(j).dim(), 1u);
}
