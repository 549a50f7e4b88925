#pragma once

// Independent oracles, random generators for property checks, and the built-in self-test
// suite behind `minertia check`.
//
// The oracle route never touches congruence elimination: the characteristic polynomial is
// interpolated from exact determinants det(kI - X), k = 0..q, and the inertia is read off by
// Descartes' rule, which is exact for real-rooted polynomials.

#include <chrono>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "degree.hpp"
#include "inertia.hpp"
#include "search.hpp"
#include "strata.hpp"

namespace minertia::check {

/// det(xI - X) by Lagrange interpolation through x = 0..q.
inline RationalPolynomial interpolated_characteristic_polynomial(const HermitianMatrix& x) {
    const std::size_t q = x.q();
    std::vector<Rational> values;
    for (std::size_t k = 0; k <= q; ++k) {
        ComplexMatrix m = GaussianRational(-1) * x.entries();
        for (std::size_t i = 0; i < q; ++i) m(i, i) += GaussianRational(static_cast<long>(k));
        GaussianRational d = determinant(std::move(m));
        if (!d.is_real()) fail(ErrorKind::Inconsistency, "det(kI - X) is not real");
        values.push_back(d.re());
    }
    RationalPolynomial p;
    for (std::size_t k = 0; k <= q; ++k) {
        RationalPolynomial basis({Rational(1)});
        Rational denom(1);
        for (std::size_t j = 0; j <= q; ++j) {
            if (j == k) continue;
            basis = basis * RationalPolynomial({Rational(-static_cast<long>(j)), Rational(1)});
            denom *= Rational(static_cast<long>(k) - static_cast<long>(j));
        }
        std::vector<Rational> c = basis.coefficients();
        for (auto& v : c) v *= values[k] / denom;
        p = p + RationalPolynomial(std::move(c));
    }
    return p;
}

/// Sign counts from Descartes' rule on p(x) and p(-x); zero roots from the lowest nonzero term.
inline Inertia descartes_inertia(const HermitianMatrix& x) {
    const RationalPolynomial p = interpolated_characteristic_polynomial(x);
    std::size_t zeros = 0;
    while (p.coefficient(zeros).is_zero()) ++zeros;
    return {sign_variations(p), sign_variations(p.reflected()), zeros};
}

/// PSD test by principal minors: every principal minor is >= 0.
inline bool psd_by_minors(const HermitianMatrix& x) {
    const std::size_t q = x.q();
    for (std::size_t mask = 1; mask < (std::size_t{1} << q); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < q; ++i)
            if (mask >> i & 1) idx.push_back(i);
        ComplexMatrix sub(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = x(idx[a], idx[b]);
        if (determinant(std::move(sub)).re().sign() < 0) return false;
    }
    return true;
}

/// Random small rationals and matrices for property checks.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed, 0, 0x5e1f) {}

    Rational rational(long num_bound = 6, long den_bound = 4) {
        return Rational(BigInt(rng_.uniform_int(-num_bound, num_bound)), BigInt(rng_.uniform_int(1, den_bound)));
    }

    Rational nonzero_rational() {
        Rational r;
        do r = rational();
        while (r.is_zero());
        return r;
    }

    GaussianRational gaussian() { return {rational(), rational()}; }

    /// Hermitian with a mix of sparse and degenerate patterns so that zero diagonals and
    /// rank deficiency show up regularly.
    HermitianMatrix hermitian(std::size_t q) {
        const long style = rng_.uniform_int(0, 3);
        if (style == 3) {
            // Low rank: sum of a few signed rank-one terms.
            HermitianMatrix y = HermitianMatrix::zero(q);
            const long terms = rng_.uniform_int(0, static_cast<long>(q));
            for (long t = 0; t < terms; ++t) y = y + rational() * rank_one(q);
            return y;
        }
        ComplexMatrix m(q, q);
        for (std::size_t i = 0; i < q; ++i) {
            if (style != 1) m(i, i) = rational();
            for (std::size_t j = i + 1; j < q; ++j) {
                if (style == 2 && rng_.uniform_int(0, 1) == 0) continue;
                m(i, j) = gaussian();
                m(j, i) = m(i, j).conj();
            }
        }
        return HermitianMatrix(std::move(m));
    }

    /// v v* for a random nonzero v.
    HermitianMatrix rank_one(std::size_t q) {
        std::vector<GaussianRational> v(q);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& z : v) {
                z = gaussian();
                nonzero = nonzero || !z.is_zero();
            }
        }
        ComplexMatrix m(q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) m(i, j) = v[i] * v[j].conj();
        return HermitianMatrix(std::move(m));
    }

    ComplexMatrix invertible(std::size_t q) {
        for (;;) {
            ComplexMatrix p(q, q);
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < q; ++j) p(i, j) = gaussian();
            if (!determinant(p).is_zero()) return p;
        }
    }

    /// A* A with A of size r x q, r <= 2: PSD of rank <= 2.
    HermitianMatrix psd_rank_le2(std::size_t q) {
        const auto r = static_cast<std::size_t>(rng_.uniform_int(1, 2));
        for (;;) {
            ComplexMatrix a(r, q);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < q; ++j) a(i, j) = gaussian();
            HermitianMatrix x(conjugate_transpose(a) * a);
            if (!x.is_zero()) return x;
        }
    }

    /// a u u* - b v v* with a, b >= 0: rank <= 2, n_plus <= 1, n_minus <= 1.
    HermitianMatrix signature_le11(std::size_t q) {
        HermitianMatrix y = HermitianMatrix::zero(q);
        if (rng_.uniform_int(0, 4) != 0) y = y + abs(nonzero_rational()) * rank_one(q);
        if (rng_.uniform_int(0, 4) != 0) y = y - abs(nonzero_rational()) * rank_one(q);
        return y;
    }

    long uniform_int(long lo, long hi) { return rng_.uniform_int(lo, hi); }

private:
    RandomStream rng_;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Implementations under test; `check --inject-fault` swaps in broken variants to show the
/// suite catches them.
struct Implementations {
    std::function<Inertia(const HermitianMatrix&)> inertia = [](const HermitianMatrix& x) { return minertia::inertia(x); };
    std::function<BigInt(long)> degree = [](long q) { return degree_product_form(q); };
    std::function<BoundReport(const Assumptions&)> bound = [](const Assumptions& a) { return best_bound(a); };
};

struct CheckOptions {
    std::uint64_t seed = 20240601;
    std::size_t matrices_per_size = 200;
    long parity_sweep_max = 100000;
};

namespace detail {

template <typename Fn>
CheckResult run_check(std::string name, Fn&& fn) {
    CheckResult r{std::move(name), false, {}};
    try {
        r.detail = fn();
        r.passed = r.detail.empty();
        if (r.passed) r.detail = "ok";
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

inline std::string describe(const Inertia& in) {
    std::ostringstream os;
    os << "(" << in.n_plus << "," << in.n_minus << "," << in.n_zero << ")";
    return os.str();
}

} // namespace detail

inline std::vector<CheckResult> run_self_check(const CheckOptions& opt = {}, const Implementations& impl = {}) {
    std::vector<CheckResult> out;
    Generator gen(opt.seed);
    const std::size_t n = opt.matrices_per_size;

    out.push_back(detail::run_check("inertia matches Descartes oracle (q = 1..6)", [&]() -> std::string {
        for (std::size_t q = 1; q <= 6; ++q)
            for (std::size_t t = 0; t < n; ++t) {
                HermitianMatrix x = gen.hermitian(q);
                Inertia a = impl.inertia(x), b = descartes_inertia(x);
                if (a != b) return "q=" + std::to_string(q) + ": " + detail::describe(a) + " vs oracle " + detail::describe(b);
            }
        return {};
    }));

    out.push_back(detail::run_check("Sylvester invariance under congruence", [&]() -> std::string {
        for (std::size_t t = 0; t < n; ++t) {
            const auto q = static_cast<std::size_t>(gen.uniform_int(1, 5));
            HermitianMatrix x = gen.hermitian(q);
            if (impl.inertia(congruence_transform(x, gen.invertible(q))) != impl.inertia(x)) return "inertia changed";
        }
        return {};
    }));

    out.push_back(detail::run_check("minimal inertia remarks", [&]() -> std::string {
        for (std::size_t t = 0; t < n; ++t) {
            const auto q = static_cast<std::size_t>(gen.uniform_int(1, 6));
            HermitianMatrix x = gen.hermitian(q);
            Inertia in = impl.inertia(x);
            if (in.q() != q) return "counts do not sum to q";
            if (in.rank() < 2 * in.minimal()) return "rank < 2m";
            if (impl.inertia(gen.nonzero_rational() * x).minimal() != in.minimal()) return "m not scale invariant";
            if (impl.inertia(-x) != in.negated()) return "negation does not swap signs";
            const bool semidefinite = psd_by_minors(x) || psd_by_minors(-x);
            if ((in.minimal() == 0) != semidefinite) return "m = 0 does not match semidefiniteness";
        }
        return {};
    }));

    out.push_back(detail::run_check("cone over signature-(1,1) locus has m <= 1", [&]() -> std::string {
        for (std::size_t t = 0; t < n; ++t) {
            const auto q = static_cast<std::size_t>(gen.uniform_int(2, 7));
            HermitianMatrix y = gen.signature_le11(q);
            HermitianMatrix x = (gen.rational() * y).shifted(-gen.rational());
            if (impl.inertia(x).minimal() > 1) return "element with m >= 2 found";
        }
        return {};
    }));

    out.push_back(detail::run_check("nonzero PSD rank <= 2 has positive trace", [&]() -> std::string {
        for (std::size_t t = 0; t < n; ++t) {
            HermitianMatrix x = gen.psd_rank_le2(static_cast<std::size_t>(gen.uniform_int(2, 7)));
            if (x.trace().sign() <= 0) return "trace not positive";
        }
        return {};
    }));

    out.push_back(detail::run_check("degree product and binomial forms", [&]() -> std::string {
        if (impl.degree(3) != 3 || impl.degree(4) != 20 || impl.degree(5) != 175) return "small degrees wrong";
        for (long q = 3; q <= 50; ++q)
            if (impl.degree(q) != degree_binomial_form(q)) return "forms disagree at q=" + std::to_string(q);
        return {};
    }));

    out.push_back(detail::run_check("degree parity law", [&]() -> std::string {
        for (long q = 3; q <= 200; ++q) {
            const bool odd = mpz_odd_p(impl.degree(q).get_mpz_t()) != 0;
            if (odd != power_of_two_plus_one_exponent(q).has_value()) return "parity wrong at q=" + std::to_string(q);
        }
        parity_sweep(3, opt.parity_sweep_max);
        return {};
    }));

    out.push_back(detail::run_check("h11 bound regressions", [&]() -> std::string {
        const std::pair<long, long> expected[] = {{3, 9}, {4, 10}, {5, 17}, {6, 17}, {7, 20}};
        for (auto [q, best] : expected) {
            Assumptions a;
            a.q = q;
            a.no_irregular_pencils_genus_ge2 = true;
            if (impl.bound(a).best != best) return "best bound wrong at q=" + std::to_string(q);
        }
        return {};
    }));

    out.push_back(detail::run_check("K^2 < 8 chi chain for q = 2^k + 1, 3 <= k <= 20", [&]() -> std::string {
        for (long k = 3; k <= 20; ++k) {
            const long q = (1L << k) + 1;
            K2ChiCheck c = k2_chi_check(q);
            if (c.K2_upper != 8 * q - 17 || c.eight_chi != 8 * q - 16 || !c.strict) return "chain wrong at k=" + std::to_string(k);
        }
        return {};
    }));

    out.push_back(detail::run_check("catalog respects bounds", [&]() -> std::string {
        for (const auto& s : catalog()) {
            Assumptions a;
            a.q = s.q;
            a.p_g = s.p_g;
            a.no_irregular_pencils_genus_ge2 = s.no_irregular_pencils;
            if (s.h11 < impl.bound(a).best) return s.name + " violates its bound";
        }
        return {};
    }));

    out.push_back(detail::run_check("stratum and cone labels", [&]() -> std::string {
        auto diag = [](std::initializer_list<Rational> d) { return HermitianMatrix::diagonal(d); };
        if (classify_d2(diag({1, -1, 0, 0, 0})).label != Stratum::D1Only) return "D1 label";
        if (classify_d2(diag({1, 1, 0, 0, 0})).label != Stratum::D0Only) return "D0 label";
        if (classify_d2(diag({1, 0, 0, 0, 0})).label != Stratum::D0AndD1) return "rank-1 label";
        if (classify_d2(diag({1, 1, 1, 0, 0})).label != Stratum::NotInD2) return "rank-3 label";
        if (classify_cone(diag({2, 1, 1, 1, 0})).label != Cone::C1) return "C1 label";
        if (classify_cone(diag({3, 2, 1, 1, 1})).label != Cone::C0) return "C0 label";
        if (classify_cone(diag({2, 1, 1, 1, 1})).label != Cone::BothBoundary) return "boundary label";
        return {};
    }));

    return out;
}

} // namespace minertia::check
