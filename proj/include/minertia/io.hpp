#pragma once

// JSON encodings of every domain type. Rationals travel as "p/q" strings; matrices as
// {"q": n, "entries": [[{"re": "p/q", "im": "p/q"}, ...], ...]} with the full grid required.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "degree.hpp"
#include "inertia.hpp"
#include "search.hpp"
#include "strata.hpp"

namespace minertia {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
    return j.at(key);
}

template <typename T>
T get_field(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("field '") + key + "': " + e.what());
    }
}

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get_field<T>(j, key);
}

} // namespace detail

inline void to_json(json& j, const Rational& r) { j = r.to_string(); }
inline void from_json(const json& j, Rational& r) {
    if (j.is_string()) r = Rational::parse(j.get<std::string>());
    else if (j.is_number_integer()) r = Rational(BigInt(j.dump()));
    else fail(ErrorKind::InvalidInput, "rational must be a \"p/q\" string or an integer");
}

inline void to_json(json& j, const GaussianRational& z) { j = json{{"re", z.re()}, {"im", z.im()}}; }
inline void from_json(const json& j, GaussianRational& z) {
    z = GaussianRational(detail::get_field<Rational>(j, "re"), detail::get_field<Rational>(j, "im"));
}

inline void to_json(json& j, const HermitianMatrix& x) {
    json rows = json::array();
    for (std::size_t i = 0; i < x.q(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < x.q(); ++k) row.push_back(x(i, k));
        rows.push_back(std::move(row));
    }
    j = json{{"q", x.q()}, {"entries", std::move(rows)}};
}

/// Validates shape and conjugate symmetry; NotHermitian names the offending (i,j).
inline void from_json(const json& j, HermitianMatrix& x) {
    const long q = detail::get_field<long>(j, "q");
    if (q < 1) fail(ErrorKind::InvalidInput, "q must be >= 1");
    const json& rows = detail::field(j, "entries");
    const auto n = static_cast<std::size_t>(q);
    if (!rows.is_array() || rows.size() != n)
        fail(ErrorKind::InvalidInput, "entries must have q = " + std::to_string(q) + " rows");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            fail(ErrorKind::InvalidInput, "row " + std::to_string(i) + " must have q entries");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = rows[i][k].get<GaussianRational>();
    }
    x = HermitianMatrix(std::move(m));
}

inline void to_json(json& j, const Inertia& in) {
    j = json{{"n_plus", in.n_plus},
             {"n_minus", in.n_minus},
             {"n_zero", in.n_zero},
             {"rank", in.rank()},
             {"minimal_inertia", in.minimal()}};
}
inline void from_json(const json& j, Inertia& in) {
    in = {detail::get_field<std::size_t>(j, "n_plus"), detail::get_field<std::size_t>(j, "n_minus"),
          detail::get_field<std::size_t>(j, "n_zero")};
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != in.rank())
        fail(ErrorKind::InvalidInput, "rank disagrees with n_plus + n_minus");
    if (j.contains("minimal_inertia") && j.at("minimal_inertia").get<std::size_t>() != in.minimal())
        fail(ErrorKind::InvalidInput, "minimal_inertia disagrees with min(n_plus, n_minus)");
}

/// Output of the classify command: the D2 label and, when requested, the cone label.
struct Classification {
    std::size_t q = 0;
    StratumLabel d2;
    std::optional<ConeLabel> cone;

    friend bool operator==(const Classification&, const Classification&) = default;
};

inline void to_json(json& j, const Classification& c) {
    j = json{{"q", c.q},
             {"d2", std::string(to_string(c.d2.label))},
             {"d2_real_dimension", d2_real_dimension(static_cast<long>(c.q))},
             {"in_d2", c.d2.in_d2},
             {"cone", c.cone ? json(std::string(to_string(c.cone->label))) : json(nullptr)},
             {"apex_shift", c.cone ? detail::optional_json(c.cone->apex_shift) : json(nullptr)}};
}
inline void from_json(const json& j, Classification& c) {
    c.q = detail::get_field<std::size_t>(j, "q");
    c.d2.label = parse_stratum(detail::get_field<std::string>(j, "d2"));
    c.d2.in_d2 = c.d2.label != Stratum::NotInD2;
    c.cone.reset();
    if (auto cone = detail::optional_field<std::string>(j, "cone"))
        c.cone = ConeLabel{parse_cone(*cone), detail::optional_field<Rational>(j, "apex_shift")};
}

inline void to_json(json& j, const DegreeRecord& r) {
    j = json{{"q", r.q},
             {"degree", r.degree ? json(r.degree->get_str()) : json(nullptr)},
             {"v2", r.v2},
             {"is_odd", r.is_odd},
             {"q_is_2k_plus_1", r.q_is_2k_plus_1},
             {"k", detail::optional_json(r.k)}};
}
inline void from_json(const json& j, DegreeRecord& r) {
    r.q = detail::get_field<long>(j, "q");
    r.degree.reset();
    if (auto d = detail::optional_field<std::string>(j, "degree")) r.degree = BigInt(*d);
    r.v2 = detail::get_field<long>(j, "v2");
    r.is_odd = detail::get_field<bool>(j, "is_odd");
    r.q_is_2k_plus_1 = detail::get_field<bool>(j, "q_is_2k_plus_1");
    r.k = detail::optional_field<long>(j, "k");
}

inline void to_json(json& j, const PencilData& p) { j = json{{"b", p.b}, {"fibers", p.fiber_components}}; }
inline void from_json(const json& j, PencilData& p) {
    p.b = detail::get_field<long>(j, "b");
    p.fiber_components = detail::get_field<std::vector<long>>(j, "fibers");
}

inline void to_json(json& j, const Assumptions& a) {
    j = json{{"q", a.q},
             {"p_g", detail::optional_json(a.p_g)},
             {"no_irregular_pencils_genus_ge2", a.no_irregular_pencils_genus_ge2},
             {"pencil", detail::optional_json(a.pencil)},
             {"minimal_surface", a.minimal_surface}};
}
inline void from_json(const json& j, Assumptions& a) {
    a.q = detail::get_field<long>(j, "q");
    a.p_g = detail::optional_field<long>(j, "p_g");
    a.no_irregular_pencils_genus_ge2 = detail::get_field<bool>(j, "no_irregular_pencils_genus_ge2");
    a.pencil = detail::optional_field<PencilData>(j, "pencil");
    a.minimal_surface = detail::get_field<bool>(j, "minimal_surface");
}

inline void to_json(json& j, const BoundEntry& b) {
    j = json{{"name", b.name},
             {"value", detail::optional_json(b.value)},
             {"applicable", b.applicable},
             {"provenance", b.provenance}};
}
inline void from_json(const json& j, BoundEntry& b) {
    b.name = detail::get_field<std::string>(j, "name");
    b.value = detail::optional_field<long>(j, "value");
    b.applicable = detail::get_field<bool>(j, "applicable");
    b.provenance = detail::get_field<std::string>(j, "provenance");
}

inline void to_json(json& j, const BoundReport& r) {
    j = json{{"q", r.q},
             {"assumptions", r.assumptions},
             {"bounds", r.bounds},
             {"best", r.best},
             {"best_names", r.best_names}};
}
inline void from_json(const json& j, BoundReport& r) {
    r.q = detail::get_field<long>(j, "q");
    r.assumptions = detail::get_field<Assumptions>(j, "assumptions");
    r.bounds = detail::get_field<std::vector<BoundEntry>>(j, "bounds");
    r.best = detail::get_field<long>(j, "best");
    r.best_names = detail::get_field<std::vector<std::string>>(j, "best_names");
}

inline void to_json(json& j, const SurfaceRecord& s) {
    j = json{{"name", s.name},
             {"q", s.q},
             {"p_g", detail::optional_json(s.p_g)},
             {"h11", s.h11},
             {"no_irregular_pencils", s.no_irregular_pencils},
             {"note", s.note}};
}
inline void from_json(const json& j, SurfaceRecord& s) {
    s.name = detail::get_field<std::string>(j, "name");
    s.q = detail::get_field<long>(j, "q");
    s.p_g = detail::optional_field<long>(j, "p_g");
    s.h11 = detail::get_field<long>(j, "h11");
    s.no_irregular_pencils = detail::get_field<bool>(j, "no_irregular_pencils");
    s.note = detail::get_field<std::string>(j, "note");
}

inline void to_json(json& j, const Witness& w) {
    j = json{{"coefficients", w.coefficients}, {"element", w.element}, {"inertia", w.inertia}};
}
inline void from_json(const json& j, Witness& w) {
    w.coefficients = detail::get_field<std::vector<Rational>>(j, "coefficients");
    w.element = detail::get_field<HermitianMatrix>(j, "element");
    w.inertia = detail::get_field<Inertia>(j, "inertia");
}

inline void to_json(json& j, const InertiaProfile& p) {
    json h = json::object();
    for (const auto& [m, count] : p.histogram) h[std::to_string(m)] = count;
    j = json{{"histogram", std::move(h)},
             {"samples", p.samples},
             {"escalated", p.escalated},
             {"spot_checked", p.spot_checked},
             {"spot_mismatches", p.spot_mismatches}};
}
inline void from_json(const json& j, InertiaProfile& p) {
    p.histogram.clear();
    for (const auto& [key, value] : detail::field(j, "histogram").items())
        p.histogram[std::stoul(key)] = value.get<std::size_t>();
    p.samples = detail::get_field<std::size_t>(j, "samples");
    p.escalated = detail::get_field<std::size_t>(j, "escalated");
    p.spot_checked = detail::get_field<std::size_t>(j, "spot_checked");
    p.spot_mismatches = detail::get_field<std::size_t>(j, "spot_mismatches");
}

inline void to_json(json& j, const GrowStep& s) {
    j = json{{"dim", s.dim},
             {"proposals", s.proposals},
             {"falsified", s.falsified},
             {"accepted", s.accepted},
             {"samples_used", s.samples_used}};
}
inline void from_json(const json& j, GrowStep& s) {
    s.dim = detail::get_field<std::size_t>(j, "dim");
    s.proposals = detail::get_field<std::size_t>(j, "proposals");
    s.falsified = detail::get_field<std::size_t>(j, "falsified");
    s.accepted = detail::get_field<bool>(j, "accepted");
    s.samples_used = detail::get_field<std::size_t>(j, "samples_used");
}

inline json basis_json(const SubspaceBasis& b) { return json{{"q", b.q()}, {"basis", b.basis()}}; }

inline SubspaceBasis parse_basis(const json& j) {
    const long q = detail::get_field<long>(j, "q");
    if (q < 1) fail(ErrorKind::InvalidInput, "q must be >= 1");
    return SubspaceBasis(static_cast<std::size_t>(q), detail::get_field<std::vector<HermitianMatrix>>(j, "basis"));
}

inline json search_report_json(const SearchReport& r) {
    return json{{"q", r.basis.q()},
                {"dim", r.basis.dim()},
                {"seed", r.seed},
                {"witness", detail::optional_json(r.witness)},
                {"samples_used", r.samples_used},
                {"candidates_rejected", r.candidates_rejected},
                {"histogram", json(r.profile).at("histogram")},
                {"profile", r.profile},
                {"dimension_limit", detail::optional_json(r.dimension_limit)},
                {"basis", basis_json(r.basis)}};
}

inline SearchReport parse_search_report(const json& j) {
    SearchReport r{detail::get_field<std::uint64_t>(j, "seed"), parse_basis(detail::field(j, "basis")), {}, 0, 0, {},
                   std::nullopt};
    r.witness = detail::optional_field<Witness>(j, "witness");
    r.samples_used = detail::get_field<std::size_t>(j, "samples_used");
    r.candidates_rejected = detail::get_field<std::size_t>(j, "candidates_rejected");
    r.profile = detail::get_field<InertiaProfile>(j, "profile");
    r.dimension_limit = detail::optional_field<long>(j, "dimension_limit");
    if (detail::get_field<std::size_t>(j, "q") != r.basis.q() || detail::get_field<std::size_t>(j, "dim") != r.basis.dim())
        fail(ErrorKind::InvalidInput, "q/dim disagree with the basis");
    return r;
}

inline json grow_report_json(const GrowReport& r, std::uint64_t seed) {
    return json{{"q", r.basis.q()},
                {"target", r.target_dim},
                {"seed", seed},
                {"dim", r.basis.dim()},
                {"basis", basis_json(r.basis)},
                {"steps", r.steps},
                {"dimension_limit", detail::optional_json(r.dimension_limit)},
                {"notes", r.notes},
                {"certified", r.certified}};
}

inline GrowReport parse_grow_report(const json& j) {
    GrowReport r{parse_basis(detail::field(j, "basis")), {}, 0, std::nullopt, {}, false};
    r.steps = detail::get_field<std::vector<GrowStep>>(j, "steps");
    r.target_dim = detail::get_field<std::size_t>(j, "target");
    r.dimension_limit = detail::optional_field<long>(j, "dimension_limit");
    r.notes = detail::get_field<std::vector<std::string>>(j, "notes");
    r.certified = detail::get_field<bool>(j, "certified");
    return r;
}

} // namespace minertia
