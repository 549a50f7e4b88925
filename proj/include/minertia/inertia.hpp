#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace minertia {

/// Eigenvalue sign counts of a Hermitian matrix.
struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    std::size_t q() const { return n_plus + n_minus + n_zero; }
    std::size_t rank() const { return n_plus + n_minus; }
    /// min(n_plus, n_minus); zero exactly for semidefinite matrices.
    std::size_t minimal() const { return std::min(n_plus, n_minus); }
    /// Inertia of the negated matrix.
    Inertia negated() const { return {n_minus, n_plus, n_zero}; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia by symmetric congruence elimination over Q(i).
///
/// Each step either pivots on the nonzero diagonal entry of least bit size and
/// clears its row and column, or, when the remaining diagonal is all zero, replaces
/// e_i by e_i + c e_j (c = 1 if Re h_ij != 0, else c = i) to create a nonzero
/// diagonal entry 2 Re(c h_ij). The signs of the pivots are the signature by
/// Sylvester's law.
inline Inertia inertia(const HermitianMatrix& x) {
    const std::size_t q = x.q();
    ComplexMatrix a = x.entries();
    std::vector<std::size_t> active(q);
    for (std::size_t i = 0; i < q; ++i) active[i] = i;

    Inertia result;
    while (!active.empty()) {
        std::optional<std::size_t> pivot_pos;
        std::size_t best_bits = 0;
        for (std::size_t p = 0; p < active.size(); ++p) {
            const Rational& d = a(active[p], active[p]).re();
            if (d.is_zero()) continue;
            std::size_t bits = d.bit_size();
            if (!pivot_pos || bits < best_bits) {
                pivot_pos = p;
                best_bits = bits;
            }
        }

        if (pivot_pos) {
            const std::size_t k = active[*pivot_pos];
            const Rational d = a(k, k).re();
            (d.sign() > 0 ? result.n_plus : result.n_minus) += 1;
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(*pivot_pos));
            for (std::size_t i : active) {
                if (a(i, k).is_zero()) continue;
                const GaussianRational f = a(i, k) / GaussianRational(d);
                for (std::size_t j : active) a(i, j) -= f * a(k, j);
            }
            continue;
        }

        std::optional<std::pair<std::size_t, std::size_t>> off;
        for (std::size_t i : active) {
            for (std::size_t j : active)
                if (i != j && !a(i, j).is_zero()) {
                    off = {i, j};
                    break;
                }
            if (off) break;
        }
        if (!off) break;

        const auto [i, j] = *off;
        const GaussianRational c = a(i, j).re().is_zero() ? GaussianRational::i() : GaussianRational(1);
        const GaussianRational cc = c.conj();
        for (std::size_t t : active) a(i, t) += cc * a(j, t);
        for (std::size_t t : active) a(t, i) += a(t, j) * c;
        if (a(i, i).is_zero() || !a(i, i).is_real())
            fail(ErrorKind::Inconsistency, "congruence step failed to create a real nonzero pivot");
    }
    result.n_zero = q - result.n_plus - result.n_minus;
    return result;
}

inline std::size_t minimal_inertia(const HermitianMatrix& x) { return inertia(x).minimal(); }

inline std::size_t rank(const HermitianMatrix& x) { return inertia(x).rank(); }

/// P* X P for invertible P.
inline HermitianMatrix congruence_transform(const HermitianMatrix& x, const ComplexMatrix& p) {
    if (!p.is_square() || p.rows() != x.q()) fail(ErrorKind::InvalidInput, "transform has the wrong shape");
    if (determinant(p).is_zero()) fail(ErrorKind::SingularTransform, "transform is singular");
    return HermitianMatrix(conjugate_transpose(p) * x.entries() * p);
}

/// True when X is positive semidefinite.
inline bool is_psd(const HermitianMatrix& x) { return inertia(x).n_minus == 0; }

} // namespace minertia
