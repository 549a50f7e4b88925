#pragma once

// Randomized falsifier and explorer for real subspaces of Hermitian matrices whose nonzero
// elements all have minimal inertia >= 2.
//
// Candidates are generated in double precision (Eigen's self-adjoint eigensolver) and every
// decision is re-verified exactly: a witness is only returned after its rational coefficients
// have been rounded, the exact element rebuilt, and its inertia recomputed by congruence.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "degree.hpp"
#include "inertia.hpp"
#include "strata.hpp"

namespace minertia {

struct SearchConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 256;
    std::size_t descent_steps = 64;
    double float_tolerance = 1e-9;
    std::size_t workers = 1;
    std::uint64_t denominator_cap = std::uint64_t{1} << 16;
    /// Fraction of non-boundary profile samples that are also checked exactly.
    double verify_fraction = 0.05;
};

/// Seedable stream family: stream(seed, index) is a fixed function of its arguments, so work
/// can be split across any number of workers without changing results.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t index, std::uint64_t domain = 0) {
        std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (domain + 1));
        s = mix(s) ^ mix(index + 0x632be59bd9b4e019ULL);
        engine_.seed(mix(s));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal() {
        if (spare_) {
            double v = *spare_;
            spare_.reset();
            return v;
        }
        double u1 = 0;
        while (u1 <= 0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        spare_ = r * std::sin(two_pi * u2);
        return r * std::cos(two_pi * u2);
    }

    /// Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do v = engine_();
        while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Coordinates of a Hermitian matrix in R^{q^2}: diagonal, then Re and Im above the diagonal.
inline std::vector<Rational> real_coordinates(const HermitianMatrix& x) {
    std::vector<Rational> c;
    c.reserve(x.q() * x.q());
    for (std::size_t i = 0; i < x.q(); ++i) c.push_back(x(i, i).re());
    for (std::size_t i = 0; i < x.q(); ++i)
        for (std::size_t j = i + 1; j < x.q(); ++j) {
            c.push_back(x(i, j).re());
            c.push_back(x(i, j).im());
        }
    return c;
}

inline std::size_t real_rank(const std::vector<HermitianMatrix>& mats) {
    if (mats.empty()) return 0;
    const std::size_t n = mats.front().q() * mats.front().q();
    RationalMatrix m(mats.size(), n);
    for (std::size_t r = 0; r < mats.size(); ++r) {
        auto c = real_coordinates(mats[r]);
        for (std::size_t j = 0; j < n; ++j) m(r, j) = std::move(c[j]);
    }
    return matrix_rank(std::move(m));
}

/// Real-linearly independent Hermitian matrices of a common size.
class SubspaceBasis {
public:
    SubspaceBasis(std::size_t q, std::vector<HermitianMatrix> basis) : q_(q), basis_(std::move(basis)) {
        if (q_ == 0) fail(ErrorKind::InvalidInput, "subspace needs q >= 1");
        if (basis_.size() > q_ * q_) fail(ErrorKind::InvalidInput, "subspace dimension exceeds q^2");
        for (const auto& b : basis_)
            if (b.q() != q_) fail(ErrorKind::InvalidInput, "basis matrices must all be q x q");
        if (real_rank(basis_) != basis_.size()) fail(ErrorKind::InvalidInput, "basis is not linearly independent");
    }

    std::size_t q() const { return q_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<HermitianMatrix>& basis() const { return basis_; }
    const HermitianMatrix& operator[](std::size_t i) const { return basis_[i]; }

    HermitianMatrix combine(const std::vector<Rational>& coefficients) const {
        if (coefficients.size() != basis_.size()) fail(ErrorKind::InvalidInput, "coefficient count mismatch");
        ComplexMatrix m(q_, q_);
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (coefficients[k].is_zero()) continue;
            m = m + GaussianRational(coefficients[k]) * basis_[k].entries();
        }
        return HermitianMatrix(std::move(m));
    }

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    std::size_t q_;
    std::vector<HermitianMatrix> basis_;
};

struct Witness {
    std::vector<Rational> coefficients;
    HermitianMatrix element;
    Inertia inertia;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct FalsifyOutcome {
    std::optional<Witness> witness;
    std::size_t samples_used = 0;
    std::size_t candidates_rejected = 0; ///< float candidates that failed exact verification
};

struct InertiaProfile {
    std::map<std::size_t, std::size_t> histogram; ///< minimal inertia -> count
    std::size_t samples = 0;
    std::size_t escalated = 0;    ///< near a sign boundary, decided exactly
    std::size_t spot_checked = 0; ///< away from the boundary, also checked exactly
    std::size_t spot_mismatches = 0;

    friend bool operator==(const InertiaProfile&, const InertiaProfile&) = default;
};

namespace detail {

inline constexpr std::uint64_t kFalsifyDomain = 1;
inline constexpr std::uint64_t kProfileDomain = 2;
inline constexpr std::uint64_t kGrowDomain = 3;
inline constexpr std::uint64_t kSubspaceDomain = 4;
inline constexpr std::size_t kChunk = 16;

// Runs body(i) for i in [0, n) on up to `workers` threads; results must be written by index.
template <typename Body>
void parallel_for(std::size_t n, std::size_t workers, Body&& body) {
    workers = std::max<std::size_t>(1, std::min(workers, n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline Rational random_entry(RandomStream& rng) {
    return Rational(BigInt(rng.uniform_int(-8, 8)), BigInt(rng.uniform_int(1, 4)));
}

inline HermitianMatrix random_hermitian(std::size_t q, RandomStream& rng) {
    ComplexMatrix m(q, q);
    for (std::size_t i = 0; i < q; ++i) {
        m(i, i) = random_entry(rng);
        for (std::size_t j = i + 1; j < q; ++j) {
            m(i, j) = GaussianRational(random_entry(rng), random_entry(rng));
            m(j, i) = m(i, j).conj();
        }
    }
    return HermitianMatrix(std::move(m));
}

class FloatImage {
public:
    explicit FloatImage(const SubspaceBasis& basis) : q_(basis.q()) {
        for (const auto& b : basis.basis()) {
            Eigen::MatrixXcd m(q_, q_);
            for (std::size_t i = 0; i < q_; ++i)
                for (std::size_t j = 0; j < q_; ++j)
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {b(i, j).re().to_double(),
                                                                                      b(i, j).im().to_double()};
            mats_.push_back(std::move(m));
        }
    }

    std::size_t dim() const { return mats_.size(); }
    std::size_t q() const { return q_; }

    Eigen::MatrixXcd element(const std::vector<double>& c) const {
        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(q_), static_cast<Eigen::Index>(q_));
        for (std::size_t k = 0; k < mats_.size(); ++k) x += c[k] * mats_[k];
        return x;
    }

    /// Ascending eigenvalues and Frobenius norm of the element.
    std::pair<Eigen::VectorXd, double> spectrum(const std::vector<double>& c) const {
        Eigen::MatrixXcd x = element(c);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x, Eigen::EigenvaluesOnly);
        return {es.eigenvalues(), x.norm()};
    }

    /// Positive exactly when the float spectrum has at most one eigenvalue of some sign:
    /// max(lambda_2, -lambda_{q-1}) relative to |X|.
    double margin(const std::vector<double>& c) const {
        if (q_ <= 3) return 1.0;
        auto [ev, norm] = spectrum(c);
        if (norm == 0) return -1.0;
        const auto n = static_cast<Eigen::Index>(q_);
        return std::max(ev(1), -ev(n - 2)) / norm;
    }

private:
    std::size_t q_;
    std::vector<Eigen::MatrixXcd> mats_;
};

inline void normalize(std::vector<double>& c) {
    double s = 0;
    for (double v : c) s += v * v;
    s = std::sqrt(s);
    if (s > 0)
        for (double& v : c) v /= s;
}

inline std::vector<double> random_unit(std::size_t dim, RandomStream& rng) {
    std::vector<double> c(dim);
    do {
        for (double& v : c) v = rng.normal();
        normalize(c);
    } while (std::all_of(c.begin(), c.end(), [](double v) { return v == 0; }));
    return c;
}

// Scales so the largest coefficient is 1 in magnitude, then rounds each by continued fractions.
inline std::vector<Rational> round_coefficients(const std::vector<double>& c, std::uint64_t cap) {
    double peak = 0;
    for (double v : c) peak = std::max(peak, std::abs(v));
    std::vector<Rational> out;
    out.reserve(c.size());
    for (double v : c) out.push_back(approximate(peak > 0 ? v / peak : 0.0, cap));
    return out;
}

inline std::optional<Witness> certify(const SubspaceBasis& basis, const std::vector<double>& c, std::uint64_t cap) {
    std::vector<Rational> coeffs = round_coefficients(c, cap);
    HermitianMatrix x = basis.combine(coeffs);
    if (x.is_zero()) return std::nullopt;
    Inertia in = inertia(x);
    if (in.minimal() > 1) return std::nullopt;
    return Witness{std::move(coeffs), std::move(x), in};
}

struct SampleResult {
    std::optional<Witness> witness;
    bool rejected = false;
};

// One random start plus coordinate descent on the basis coefficients.
inline SampleResult falsify_sample(const SubspaceBasis& basis, const FloatImage& image, const SearchConfig& cfg,
                                   std::size_t index) {
    RandomStream rng(cfg.seed, index, kFalsifyDomain);
    std::vector<double> c = random_unit(image.dim(), rng);
    double f = image.margin(c);

    // Push past the boundary by more than the rounding perturbation of the exact check.
    const double target = std::max(cfg.float_tolerance, 4.0 / static_cast<double>(cfg.denominator_cap));
    double step = 0.25;
    for (std::size_t s = 0; s < cfg.descent_steps && f <= target; ++s) {
        bool improved = false;
        for (std::size_t i = 0; i < c.size() && !improved; ++i)
            for (double dir : {1.0, -1.0}) {
                std::vector<double> trial = c;
                trial[i] += dir * step;
                normalize(trial);
                const double ft = image.margin(trial);
                if (ft > f) {
                    c = std::move(trial);
                    f = ft;
                    improved = true;
                    break;
                }
            }
        if (!improved) step *= 0.5;
        if (step < 1e-12) break;
    }

    SampleResult r;
    if (f > -cfg.float_tolerance) {
        r.witness = certify(basis, c, cfg.denominator_cap);
        r.rejected = !r.witness.has_value();
    }
    return r;
}

} // namespace detail

/// `dim` independent Hermitian matrices with entries p/d, |p| <= 8, 1 <= d <= 4; dependent
/// draws are discarded and redrawn.
inline SubspaceBasis random_subspace(std::size_t q, std::size_t dim, std::uint64_t seed) {
    if (q == 0) fail(ErrorKind::InvalidInput, "q must be >= 1");
    if (dim < 1 || dim > q * q)
        fail(ErrorKind::InvalidInput, "dimension must satisfy 1 <= dim <= q^2, got " + std::to_string(dim));
    RandomStream rng(seed, 0, detail::kSubspaceDomain);
    std::vector<HermitianMatrix> basis;
    while (basis.size() < dim) {
        basis.push_back(detail::random_hermitian(q, rng));
        if (real_rank(basis) != basis.size()) basis.pop_back();
    }
    return SubspaceBasis(q, std::move(basis));
}

/// Searches the span for a nonzero element with min(n+, n-) <= 1. A returned witness is exactly
/// certified; no witness means the search was inconclusive, not that none exists.
inline FalsifyOutcome falsify_min_inertia(const SubspaceBasis& basis, const SearchConfig& cfg) {
    FalsifyOutcome out;
    if (basis.dim() == 0 || cfg.samples == 0) return out;
    const detail::FloatImage image(basis);

    for (std::size_t start = 0; start < cfg.samples; start += detail::kChunk) {
        const std::size_t n = std::min(detail::kChunk, cfg.samples - start);
        std::vector<detail::SampleResult> results(n);
        detail::parallel_for(n, cfg.workers,
                             [&](std::size_t i) { results[i] = detail::falsify_sample(basis, image, cfg, start + i); });
        for (std::size_t i = 0; i < n; ++i) {
            if (results[i].witness) {
                // Lowest sample index wins; later samples in the chunk are not counted.
                out.witness = std::move(results[i].witness);
                out.samples_used = start + i + 1;
                return out;
            }
            if (results[i].rejected) ++out.candidates_rejected;
        }
        out.samples_used = start + n;
    }
    return out;
}

/// Histogram of minimal inertia over random unit elements of the span. Float sign counts are
/// used away from the boundary; samples with an eigenvalue within float_tolerance * |X| of zero
/// are decided exactly, as is a verify_fraction share of the rest.
inline InertiaProfile empirical_min_inertia_profile(const SubspaceBasis& basis, const SearchConfig& cfg) {
    InertiaProfile prof;
    if (basis.dim() == 0) return prof;
    const detail::FloatImage image(basis);

    struct One {
        std::size_t m = 0;
        bool escalated = false;
        bool spot = false;
        bool mismatch = false;
    };
    std::vector<One> results(cfg.samples);
    detail::parallel_for(cfg.samples, cfg.workers, [&](std::size_t idx) {
        RandomStream rng(cfg.seed, idx, detail::kProfileDomain);
        std::vector<double> c = detail::random_unit(image.dim(), rng);
        const bool spot = rng.uniform() < cfg.verify_fraction;
        auto [ev, norm] = image.spectrum(c);
        std::size_t plus = 0, minus = 0;
        bool boundary = norm == 0;
        for (Eigen::Index k = 0; k < ev.size(); ++k) {
            if (std::abs(ev(k)) <= cfg.float_tolerance * norm) boundary = true;
            else if (ev(k) > 0) ++plus;
            else ++minus;
        }
        One r;
        r.m = std::min(plus, minus);
        if (boundary || spot) {
            HermitianMatrix x = basis.combine(detail::round_coefficients(c, cfg.denominator_cap));
            const std::size_t exact = inertia(x).minimal();
            r.escalated = boundary;
            r.spot = !boundary;
            r.mismatch = !boundary && exact != r.m;
            r.m = exact;
        }
        results[idx] = r;
    });

    for (const auto& r : results) {
        ++prof.histogram[r.m];
        prof.escalated += r.escalated;
        prof.spot_checked += r.spot;
        prof.spot_mismatches += r.mismatch;
    }
    prof.samples = cfg.samples;
    return prof;
}

struct GrowStep {
    std::size_t dim = 0; ///< dimension the step tried to reach
    std::size_t proposals = 0;
    std::size_t falsified = 0;
    bool accepted = false;
    std::size_t samples_used = 0;

    friend bool operator==(const GrowStep&, const GrowStep&) = default;
};

struct GrowReport {
    SubspaceBasis basis;
    std::vector<GrowStep> steps;
    std::size_t target_dim = 0;
    std::optional<long> dimension_limit; ///< known upper bound, q = 2^k + 1 with k >= 2
    std::vector<std::string> notes;
    bool certified = false; ///< always false: surviving a finite search proves nothing
};

inline constexpr std::size_t kGrowProposalsPerStep = 8;

/// Greedy growth: propose random matrices and keep one whenever the falsifier stays
/// inconclusive on the enlarged span. Stops at the target or after a step where every
/// proposal was falsified.
inline GrowReport grow_subspace(std::size_t q, std::size_t target_dim, const SearchConfig& cfg,
                                std::size_t proposals_per_step = kGrowProposalsPerStep) {
    if (q == 0) fail(ErrorKind::InvalidInput, "q must be >= 1");
    if (target_dim > q * q) fail(ErrorKind::InvalidInput, "target dimension exceeds q^2");

    GrowReport rep{SubspaceBasis(q, {}), {}, target_dim, std::nullopt, {}, false};
    const auto k = power_of_two_plus_one_exponent(static_cast<long>(q));
    if (k && *k >= 2) {
        rep.dimension_limit = subspace_dimension_limit(static_cast<long>(q));
        if (static_cast<long>(target_dim) > *rep.dimension_limit)
            rep.notes.push_back("target exceeds the dimension limit " + std::to_string(*rep.dimension_limit) +
                                "; every span of that size has an element with minimal inertia <= 1");
    } else {
        rep.notes.push_back("no direct bound: q is not 2^k + 1 with k >= 2");
    }
    rep.notes.push_back("candidate only: surviving span is not certified");

    std::vector<HermitianMatrix> current;
    RandomStream rng(cfg.seed, 0, detail::kGrowDomain);
    while (current.size() < target_dim) {
        GrowStep step;
        step.dim = current.size() + 1;
        for (std::size_t attempt = 0; attempt < proposals_per_step && !step.accepted; ++attempt) {
            std::vector<HermitianMatrix> trial = current;
            do {
                if (trial.size() > current.size()) trial.pop_back();
                trial.push_back(detail::random_hermitian(q, rng));
            } while (real_rank(trial) != trial.size());
            ++step.proposals;

            SearchConfig sub = cfg;
            sub.seed = RandomStream(cfg.seed, step.dim * 1000 + attempt, detail::kGrowDomain).next();
            SubspaceBasis candidate(q, trial);
            FalsifyOutcome f = falsify_min_inertia(candidate, sub);
            step.samples_used += f.samples_used;
            if (f.witness) {
                ++step.falsified;
            } else {
                step.accepted = true;
                current = std::move(trial);
            }
        }
        rep.steps.push_back(step);
        if (!step.accepted) break;
    }
    rep.basis = SubspaceBasis(q, std::move(current));
    return rep;
}

struct SearchReport {
    std::uint64_t seed = 0;
    SubspaceBasis basis;
    std::optional<Witness> witness;
    std::size_t samples_used = 0;
    std::size_t candidates_rejected = 0;
    InertiaProfile profile;
    std::optional<long> dimension_limit;

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Falsifier plus profile on one span.
inline SearchReport search_report(SubspaceBasis basis, const SearchConfig& cfg) {
    FalsifyOutcome f = falsify_min_inertia(basis, cfg);
    InertiaProfile p = empirical_min_inertia_profile(basis, cfg);
    std::optional<long> limit;
    const auto k = power_of_two_plus_one_exponent(static_cast<long>(basis.q()));
    if (k && *k >= 2) limit = subspace_dimension_limit(static_cast<long>(basis.q()));
    return {cfg.seed, std::move(basis), std::move(f.witness), f.samples_used, f.candidates_rejected, std::move(p), limit};
}

} // namespace minertia
