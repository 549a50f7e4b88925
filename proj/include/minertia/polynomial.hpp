#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace minertia {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; the leading coefficient is never zero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    /// (x - root)^power
    static RationalPolynomial linear_power(const Rational& root, std::size_t power) {
        RationalPolynomial p({Rational(1)});
        RationalPolynomial factor({-root, Rational(1)});
        for (std::size_t k = 0; k < power; ++k) p = p * factor;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RationalPolynomial derivative() const {
        std::vector<Rational> d;
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
        return RationalPolynomial(std::move(d));
    }

    RationalPolynomial monic() const {
        if (is_zero()) return *this;
        Rational lc = leading();
        std::vector<Rational> c = coeffs_;
        for (auto& x : c) x /= lc;
        return RationalPolynomial(std::move(c));
    }

    /// p(-x)
    RationalPolynomial reflected() const {
        std::vector<Rational> c = coeffs_;
        for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
        return RationalPolynomial(std::move(c));
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPolynomial(std::move(c));
    }
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// Quotient and remainder of exact division over Q.
    friend std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                    const RationalPolynomial& b) {
        if (b.is_zero()) fail(ErrorKind::DivideByZero, "polynomial division by zero");
        std::vector<Rational> rem = a.coeffs_;
        long db = b.degree();
        std::vector<Rational> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
        for (long k = a.degree(); k >= db; --k) {
            Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
            quot[static_cast<std::size_t>(k - db)] = f;
            for (long j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
        }
        return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (long k = degree(); k >= 0; --k) {
            const Rational& c = coeffs_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) out += "-";
            Rational a = abs(c);
            if (k == 0 || a != Rational(1)) out += a.to_string();
            if (k >= 1) out += "x";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

namespace detail {

using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Primitive part with positive leading coefficient.
inline IntPoly primitive(IntPoly p) {
    trim(p);
    if (p.empty()) return p;
    BigInt content = 0;
    for (const auto& c : p) content = gcd(content, c);
    if (p.back() < 0) content = -content;
    for (auto& c : p) c /= content;
    return p;
}

inline IntPoly to_primitive_integer(const RationalPolynomial& p) {
    BigInt lcm_den = 1;
    for (const auto& c : p.coefficients()) lcm_den = lcm(lcm_den, c.denominator());
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c.numerator() * (lcm_den / c.denominator()));
    return primitive(std::move(out));
}

// lc(b)^e * a mod b, computed without division.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        BigInt la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

} // namespace detail

/// Monic gcd over Q via the primitive polynomial remainder sequence on integer images.
/// gcd(0, 0) is the zero polynomial.
inline RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    detail::IntPoly x = detail::to_primitive_integer(a);
    detail::IntPoly y = detail::to_primitive_integer(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        detail::IntPoly r = detail::primitive(detail::pseudo_remainder(std::move(x), y));
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> c;
    c.reserve(x.size());
    for (const auto& v : x) c.emplace_back(v);
    return RationalPolynomial(std::move(c)).monic();
}

/// gcd(p, p', ..., p^(depth)), monic. Its roots are the roots of p with multiplicity > depth.
inline RationalPolynomial poly_gcd_tower(const RationalPolynomial& p, std::size_t depth) {
    if (p.is_zero()) fail(ErrorKind::InvalidInput, "gcd tower of the zero polynomial");
    RationalPolynomial g = p.monic();
    RationalPolynomial d = p;
    for (std::size_t k = 0; k < depth && g.degree() > 0; ++k) {
        d = d.derivative();
        g = gcd(g, d);
    }
    return g;
}

/// Sign variations in the coefficient sequence, zeros skipped.
inline std::size_t sign_variations(const RationalPolynomial& p) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& c : p.coefficients()) {
        int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace minertia
