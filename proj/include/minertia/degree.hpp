#pragma once

// Degree of the projective locus of q x q complex matrices of rank <= 2, and its parity.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "rational.hpp"

namespace minertia {

/// Degrees are materialized as integers only up to this size.
inline constexpr long kDegreeMaterializationBound = 200;

struct DegreeRecord {
    long q = 0;
    std::optional<BigInt> degree; ///< absent above kDegreeMaterializationBound
    long v2 = 0;                  ///< 2-adic valuation of the degree
    bool is_odd = false;
    bool q_is_2k_plus_1 = false;
    std::optional<long> k;

    friend bool operator==(const DegreeRecord&, const DegreeRecord&) = default;
};

namespace detail {

inline void require_degree_domain(long q) {
    if (q < 3) fail(ErrorKind::InvalidInput, "degree needs q >= 3, got q = " + std::to_string(q));
}

inline BigInt require_integer(const mpq_class& v, long q) {
    mpq_class c(v);
    c.canonicalize();
    if (c.get_den() != 1)
        fail(ErrorKind::Inconsistency, "degree product for q = " + std::to_string(q) + " is not an integer");
    return c.get_num();
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// v2(n!) by Legendre: n - s2(n).
inline long factorial_v2(std::uint64_t n) { return static_cast<long>(n) - std::popcount(n); }

} // namespace detail

/// prod_{j=0}^{q-3} (q+j-1)(q+j) / ((j+1)(j+2)), accumulated exactly over Q.
inline BigInt degree_product_form(long q) {
    detail::require_degree_domain(q);
    mpq_class acc(1);
    for (long j = 0; j <= q - 3; ++j) {
        acc *= mpq_class(BigInt(q + j - 1) * (q + j), BigInt(j + 1) * (j + 2));
        acc.canonicalize();
    }
    return detail::require_integer(acc, q);
}

/// prod_{j=0}^{q-3} C(q+j, q-2) / C(q-2+j, q-2).
inline BigInt degree_binomial_form(long q) {
    detail::require_degree_domain(q);
    const auto r = static_cast<unsigned long>(q - 2);
    mpq_class acc(1);
    for (long j = 0; j <= q - 3; ++j) {
        const auto uj = static_cast<unsigned long>(j);
        acc *= mpq_class(detail::binomial(r + 2 + uj, r), detail::binomial(r + uj, r));
        acc.canonicalize();
    }
    return detail::require_integer(acc, q);
}

inline bool binary_disjoint(std::uint64_t a, std::uint64_t b) { return (a & b) == 0; }

/// 2-adic valuation of the degree without materializing it. The product telescopes to
/// (2q-4)! (2q-3)! / ((q-2)!^2 (q-1)!^2), and each factorial is valued by Legendre's formula.
inline long degree_v2(long q) {
    detail::require_degree_domain(q);
    const auto n = static_cast<std::uint64_t>(q);
    return detail::factorial_v2(2 * n - 4) + detail::factorial_v2(2 * n - 3) - 2 * detail::factorial_v2(n - 2) -
           2 * detail::factorial_v2(n - 1);
}

inline std::optional<long> power_of_two_plus_one_exponent(long q) {
    if (q < 2) return std::nullopt;
    const auto m = static_cast<std::uint64_t>(q - 1);
    if (!std::has_single_bit(m)) return std::nullopt;
    return static_cast<long>(std::countr_zero(m));
}

/// Degree, parity and the q = 2^k + 1 test for one q. The degree is materialized only when
/// `materialize` is set and q is within kDegreeMaterializationBound. Throws Inconsistency if
/// oddness, binary disjointness of q-2 and q-1, and q = 2^k + 1 disagree.
inline DegreeRecord parity_record(long q, bool materialize = true) {
    detail::require_degree_domain(q);
    DegreeRecord rec;
    rec.q = q;
    rec.v2 = degree_v2(q);
    rec.is_odd = rec.v2 == 0;
    rec.k = power_of_two_plus_one_exponent(q);
    rec.q_is_2k_plus_1 = rec.k.has_value();

    if (materialize && q <= kDegreeMaterializationBound) {
        rec.degree = degree_product_form(q);
        const long v = static_cast<long>(mpz_scan1(rec.degree->get_mpz_t(), 0));
        if (v != rec.v2)
            fail(ErrorKind::Inconsistency, "valuation of materialized degree disagrees for q = " + std::to_string(q));
    }

    const bool disjoint = binary_disjoint(static_cast<std::uint64_t>(q - 2), static_cast<std::uint64_t>(q - 1));
    if (rec.is_odd != disjoint || disjoint != rec.q_is_2k_plus_1)
        fail(ErrorKind::Inconsistency, "parity law fails at q = " + std::to_string(q));
    return rec;
}

/// Checks the parity law for every q in [lo, hi] by valuations; returns the count checked.
inline long parity_sweep(long lo, long hi) {
    if (lo < 3 || hi < lo) fail(ErrorKind::InvalidInput, "parity sweep needs 3 <= lo <= hi");
    for (long q = lo; q <= hi; ++q) parity_record(q, false);
    return hi - lo + 1;
}

} // namespace minertia
