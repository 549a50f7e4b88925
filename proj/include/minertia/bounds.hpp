#pragma once

// Lower bounds for h^{1,1} of irregular surfaces of general type in terms of the
// irregularity q, plus the Chern-number bookkeeping that links them to K^2 and chi.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace minertia {

struct PencilData {
    long b = 1;                       ///< genus of the base curve
    std::vector<long> fiber_components; ///< l(F) for each listed fiber

    friend bool operator==(const PencilData&, const PencilData&) = default;
};

struct Assumptions {
    long q = 1;
    std::optional<long> p_g;
    bool no_irregular_pencils_genus_ge2 = false;
    std::optional<PencilData> pencil;
    bool minimal_surface = false;

    friend bool operator==(const Assumptions&, const Assumptions&) = default;
};

struct BoundEntry {
    std::string name;
    std::optional<long> value; ///< empty when not applicable
    bool applicable = false;
    std::string provenance;

    friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct BoundReport {
    long q = 0;
    Assumptions assumptions;
    std::vector<BoundEntry> bounds;
    long best = 0;
    std::vector<std::string> best_names;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

namespace bound_names {
inline constexpr const char* kBmy = "bmy";
inline constexpr const char* kGeneralType = "general_type";
inline constexpr const char* kOddQ = "odd_q";
inline constexpr const char* kPencil = "pencil";
inline constexpr const char* kPowerOfTwo = "power_of_two_plus_one";
inline constexpr const char* kEpsilon = "power_of_two_plus_one_plus_epsilon";
} // namespace bound_names

namespace detail {
inline bool is_power_of_two_plus_one(long q) {
    return q >= 2 && std::has_single_bit(static_cast<std::uint64_t>(q - 1));
}
} // namespace detail

/// From c2 >= 3 chi (Bogomolov-Miyaoka-Yau) and c2 = 2 - 4q + 2 p_g + h11.
inline long bmy_bound(long p_g, long q) { return p_g + q + 1; }

/// Holds for every surface of general type.
inline long general_bound(long q) { return 3 * q - 2; }

inline std::optional<long> odd_q_bound(long q, bool no_pencils) {
    if (!no_pencils || q % 2 == 0) return std::nullopt;
    return 3 * q - 1;
}

inline long pencil_bound(long q, const PencilData& pencil) {
    if (pencil.b < 1 || pencil.b > q)
        fail(ErrorKind::InvalidInput, "pencil genus b must satisfy 1 <= b <= q, got b = " + std::to_string(pencil.b));
    long extra = 0;
    for (long l : pencil.fiber_components) {
        if (l < 1) fail(ErrorKind::InvalidInput, "fiber component counts must be >= 1");
        extra += l - 1;
    }
    return 2 * pencil.b * (q - pencil.b) + 2 + extra;
}

/// 4q - 3 for q = 2^k + 1 without irregular pencils of genus >= 2.
inline std::optional<long> theorem_bound(long q, bool no_pencils) {
    if (!no_pencils || q < 3 || !detail::is_power_of_two_plus_one(q)) return std::nullopt;
    return 4 * q - 3;
}

/// 4q - 3 - 4 eps for q = 2^k + 1 + eps with 0 < eps < 2^k.
inline std::optional<long> epsilon_bound(long q, bool no_pencils) {
    if (!no_pencils || q < 4) return std::nullopt;
    const auto m = static_cast<std::uint64_t>(q - 1);
    const auto base = static_cast<long>(std::bit_floor(m));
    const long eps = q - 1 - base;
    if (eps <= 0) return std::nullopt;
    return 4 * q - 3 - 4 * eps;
}

inline void validate(const Assumptions& a) {
    if (a.q < 1) fail(ErrorKind::InvalidInput, "q must be >= 1");
    if (a.p_g && *a.p_g < 0) fail(ErrorKind::InvalidInput, "p_g must be >= 0");
    if (a.pencil) {
        if (a.pencil->b < 1 || a.pencil->b > a.q)
            fail(ErrorKind::InvalidInput, "pencil genus b must satisfy 1 <= b <= q");
        for (long l : a.pencil->fiber_components)
            if (l < 1) fail(ErrorKind::InvalidInput, "fiber component counts must be >= 1");
        if (a.pencil->b >= 2 && a.no_irregular_pencils_genus_ge2)
            fail(ErrorKind::InvalidInput, "a pencil of genus >= 2 contradicts the no-irregular-pencils assumption");
    }
}

/// Evaluates every bound whose hypotheses hold; best is their maximum, with all tying names.
inline BoundReport best_bound(const Assumptions& a) {
    validate(a);
    const long q = a.q;
    const bool np = a.no_irregular_pencils_genus_ge2;
    BoundReport r;
    r.q = q;
    r.assumptions = a;

    auto add = [&](const char* name, std::optional<long> v, std::string provenance) {
        r.bounds.push_back({name, v, v.has_value(), std::move(provenance)});
    };

    add(bound_names::kBmy, a.p_g ? std::optional<long>(bmy_bound(*a.p_g, q)) : std::nullopt,
        "h11 >= p_g + q + 1 from c2 >= 3 chi (Bogomolov-Miyaoka-Yau); needs p_g");
    add(bound_names::kGeneralType, general_bound(q),
        "h11 >= 3q - 2 for every surface of general type (p_g >= 2q - 4, Beauville)");
    add(bound_names::kOddQ, odd_q_bound(q, np),
        "h11 >= 3q - 1 for odd q without irregular pencils of genus >= 2 (Lazarsfeld-Popa)");
    add(bound_names::kPencil, a.pencil ? std::optional<long>(pencil_bound(q, *a.pencil)) : std::nullopt,
        "h11 >= 2b(q - b) + 2 + sum(l(F) - 1) for an irregular pencil of genus b");
    add(bound_names::kPowerOfTwo, theorem_bound(q, np),
        q == 3 || q == 5
            ? "h11 >= 4q - 3 for q = 2^k + 1 without irregular pencils of genus >= 2 (case known previously)"
            : "h11 >= 4q - 3 for q = 2^k + 1 without irregular pencils of genus >= 2");
    add(bound_names::kEpsilon, epsilon_bound(q, np),
        "h11 >= 4q - 3 - 4 eps for q = 2^k + 1 + eps, 0 < eps < 2^k, without irregular pencils of genus >= 2");

    r.best = 0;
    for (const auto& b : r.bounds)
        if (b.applicable) r.best = std::max(r.best, *b.value);
    for (const auto& b : r.bounds)
        if (b.applicable && *b.value == r.best) r.best_names.push_back(b.name);
    return r;
}

struct SurfaceInvariants {
    long chi = 0;
    long c2 = 0;
    long K2 = 0;

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// chi = 1 - q + p_g, c2 = 2 - 4q + 2 p_g + h11, K^2 = 12 chi - c2 (Noether).
inline SurfaceInvariants surface_identities(long q, long p_g, long h11) {
    if (q < 0 || p_g < 0 || h11 < 0) fail(ErrorKind::InvalidInput, "surface invariants must be >= 0");
    SurfaceInvariants s;
    s.chi = 1 - q + p_g;
    s.c2 = 2 - 4 * q + 2 * p_g + h11;
    s.K2 = 12 * s.chi - s.c2;
    return s;
}

struct K2ChiCheck {
    long q = 0;
    long p_g = 0;
    long chi = 0;
    long h11_min = 0;
    long c2_min = 0;
    long K2_upper = 0;
    long eight_chi = 0;
    bool strict = false;

    friend bool operator==(const K2ChiCheck&, const K2ChiCheck&) = default;
};

/// For p_g = 2q - 3 and q = 2^k + 1 with k >= 3, the bound h11 >= 4q - 3 forces
/// K^2 <= 8q - 17 < 8 chi.
inline K2ChiCheck k2_chi_check(long q) {
    if (!detail::is_power_of_two_plus_one(q) || q < 9)
        fail(ErrorKind::HypothesisNotMet, "needs q = 2^k + 1 with k >= 3, got q = " + std::to_string(q));
    K2ChiCheck c;
    c.q = q;
    c.p_g = 2 * q - 3;
    c.h11_min = *theorem_bound(q, true);
    const SurfaceInvariants s = surface_identities(q, c.p_g, c.h11_min);
    c.chi = s.chi;
    c.c2_min = s.c2;
    c.K2_upper = s.K2;
    c.eight_chi = 8 * s.chi;
    c.strict = c.K2_upper < c.eight_chi;
    if (!c.strict) fail(ErrorKind::Inconsistency, "K^2 bound is not below 8 chi at q = " + std::to_string(q));
    return c;
}

struct SurfaceRecord {
    std::string name;
    long q = 0;
    std::optional<long> p_g;
    long h11 = 0;
    bool no_irregular_pencils = true;
    std::string note;

    friend bool operator==(const SurfaceRecord&, const SurfaceRecord&) = default;
};

/// C2 x C_{q-2} with g(C2) = 2: p_g = 2(q - 2), h11 = 4q - 6, q >= 4.
inline SurfaceRecord product_family_record(long q) {
    if (q < 4) fail(ErrorKind::InvalidInput, "product family needs q >= 4");
    return {"product of a genus-2 curve and a genus-(q-2) curve", q, 2 * (q - 2), 4 * q - 6, false,
            "equality case p_g = 2q - 4; c2 = 4 chi; has irregular pencils; family shown at q = " +
                std::to_string(q)};
}

inline std::vector<SurfaceRecord> catalog() {
    return {
        {"symmetric square of a genus-3 curve", 3, 3, 10, true,
         "p_g = 2q - 3; literature bound h11 >= 9 for q = 3; no example with h11 = 9 known"},
        {"Schoen surface", 4, 5, 12, true,
         "p_g = 2q - 3; smallest known h11 for q = 4; literature bound h11 >= 11"},
        {"symmetric square of a genus-4 curve", 4, 6, 17, true, "next known example for q = 4"},
        {"Fano surface of lines on a smooth cubic threefold", 5, 10, 25, true,
         "no example with h11 < 25 known for q = 5; literature bound h11 >= 17"},
        {"symmetric square of a genus-5 curve", 5, 10, 26, true, ""},
        product_family_record(4),
    };
}

} // namespace minertia
