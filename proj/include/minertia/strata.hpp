#pragma once

// Membership tests for the real rank <= 2 determinantal locus of Hermitian matrices,
// split by semidefiniteness, and for the cone over it with apex at the identity.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "inertia.hpp"

namespace minertia {

enum class Stratum { D0Only, D1Only, D0AndD1, NotInD2 };

struct StratumLabel {
    bool in_d2 = false;
    Stratum label = Stratum::NotInD2;

    friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

enum class Cone { C1, C0, Vertex, BothBoundary, NotInC2 };

struct ConeLabel {
    Cone label = Cone::NotInC2;
    /// Eigenvalue of multiplicity >= q-2 (the scalar itself for the vertex).
    std::optional<Rational> apex_shift;

    friend bool operator==(const ConeLabel&, const ConeLabel&) = default;
};

inline std::string_view to_string(Stratum s) {
    switch (s) {
    case Stratum::D0Only: return "D0_only";
    case Stratum::D1Only: return "D1_only";
    case Stratum::D0AndD1: return "D0_and_D1";
    case Stratum::NotInD2: return "NotInD2";
    }
    return "";
}

inline std::string_view to_string(Cone c) {
    switch (c) {
    case Cone::C1: return "C1";
    case Cone::C0: return "C0";
    case Cone::Vertex: return "Vertex";
    case Cone::BothBoundary: return "BothBoundary";
    case Cone::NotInC2: return "NotInC2";
    }
    return "";
}

inline Stratum parse_stratum(std::string_view s) {
    for (Stratum v : {Stratum::D0Only, Stratum::D1Only, Stratum::D0AndD1, Stratum::NotInD2})
        if (to_string(v) == s) return v;
    fail(ErrorKind::InvalidInput, "unknown stratum label '" + std::string(s) + "'");
}

inline Cone parse_cone(std::string_view s) {
    for (Cone v : {Cone::C1, Cone::C0, Cone::Vertex, Cone::BothBoundary, Cone::NotInC2})
        if (to_string(v) == s) return v;
    fail(ErrorKind::InvalidInput, "unknown cone label '" + std::string(s) + "'");
}

/// Real dimension of the rank <= 2 locus in the projectivized Hermitian matrices.
constexpr long d2_real_dimension(long q) { return 4 * q - 5; }
/// Dimension of the cone over that locus with apex at the identity.
constexpr long c2_dimension(long q) { return 4 * q - 4; }

/// Labels from inertia only, so every label is invariant under nonzero scaling.
/// D1 is {rank <= 2, n_plus <= 1, n_minus <= 1}; D0 is {rank <= 2, semidefinite}.
inline StratumLabel classify_d2(const HermitianMatrix& x) {
    const Inertia in = inertia(x);
    if (in.rank() == 0) fail(ErrorKind::NotProjectivePoint, "the zero matrix is not a projective point");
    if (in.rank() > 2) return {false, Stratum::NotInD2};
    if (in.rank() == 1) return {true, Stratum::D0AndD1};
    return {true, in.minimal() == 0 ? Stratum::D0Only : Stratum::D1Only};
}

/// The rational eigenvalue of multiplicity >= q-2, if any. Requires q >= 5, where such an
/// eigenvalue is unique: gcd(p, p', ..., p^(q-3)) of the characteristic polynomial is then
/// either 1 or (x - s)^e.
inline std::optional<Rational> eigenvalue_of_high_multiplicity(const HermitianMatrix& x) {
    const std::size_t q = x.q();
    if (q < 5) fail(ErrorKind::UnsupportedSize, "high-multiplicity eigenvalue test needs q >= 5, got q = " +
                                                    std::to_string(q));
    const RationalPolynomial g = poly_gcd_tower(characteristic_polynomial(x), q - 3);
    if (g.degree() <= 0) return std::nullopt;

    const auto e = static_cast<std::size_t>(g.degree());
    const Rational s = -g.coefficient(e - 1) / Rational(static_cast<long>(e));
    if (g != RationalPolynomial::linear_power(s, e))
        fail(ErrorKind::Inconsistency, "gcd tower " + g.to_string() + " is not a power of a linear factor");
    if (rank(x.shifted(s)) > 2)
        fail(ErrorKind::Inconsistency, "X - " + s.to_string() + "I has rank above 2");
    return s;
}

/// C1 and C0 are the cones over D1 and D0; the rank <= 1 shifts lie on both.
inline ConeLabel classify_cone(const HermitianMatrix& x) {
    if (x.is_zero()) fail(ErrorKind::NotProjectivePoint, "the zero matrix is not a projective point");
    if (x.q() < 5) fail(ErrorKind::UnsupportedSize, "cone classification needs q >= 5, got q = " +
                                                        std::to_string(x.q()));
    if (x.is_scalar()) return {Cone::Vertex, x(0, 0).re()};

    const auto s = eigenvalue_of_high_multiplicity(x);
    if (!s) return {Cone::NotInC2, std::nullopt};

    const Inertia y = inertia(x.shifted(*s));
    if (y.rank() <= 1) return {Cone::BothBoundary, s};
    if (y.rank() == 2 && y.minimal() == 1) return {Cone::C1, s};
    if (y.rank() == 2) return {Cone::C0, s};
    fail(ErrorKind::Inconsistency, "shifted matrix has rank above 2");
}

/// q^2 - (4q - 3): upper bound on the dimension of a real subspace of q x q Hermitian matrices whose
/// nonzero elements all have at least two positive and two negative eigenvalues,
/// for q = 2^k + 1 with k >= 2.
inline long subspace_dimension_limit(long q) {
    const long m = q - 1;
    const bool power_of_two = m > 0 && (m & (m - 1)) == 0;
    if (!power_of_two || m < 4)
        fail(ErrorKind::HypothesisNotMet,
             "dimension limit requires q = 2^k + 1 with k >= 2, got q = " + std::to_string(q));
    return q * q - (4 * q - 3);
}

} // namespace minertia
