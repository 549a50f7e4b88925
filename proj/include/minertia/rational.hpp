#pragma once

// Exact scalars: reduced rationals backed by GMP and Gaussian rationals over Q(i).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "error.hpp"

namespace minertia {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(int v) : value_(v) {}
    Rational(const BigInt& v) : value_(v) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) fail(ErrorKind::DivideByZero, "rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses "p/q" or "p" with optional sign; result is reduced.
    static Rational parse(std::string_view text) {
        auto bad = [&] { fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'"); };
        if (text.empty()) bad();
        auto slash = text.find('/');
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
        std::string num_s(num);
        if (num_s[0] == '+') num_s.erase(0, 1);
        BigInt n(num_s, 10), d(std::string(den), 10);
        if (d == 0) fail(ErrorKind::DivideByZero, "rational with zero denominator '" + std::string(text) + "'");
        return Rational(n, d);
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& gmp() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }

    /// Bits in numerator plus bits in denominator; a coefficient-size measure.
    std::size_t bit_size() const {
        return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
    }

    std::string to_string() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(ErrorKind::DivideByZero, "rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Best rational approximation of x with denominator at most max_den (continued fractions).
inline Rational approximate(double x, std::uint64_t max_den) {
    if (max_den == 0) fail(ErrorKind::InvalidInput, "denominator cap must be positive");
    bool negative = x < 0;
    double rest = negative ? -x : x;
    // Convergents h/k.
    BigInt h_prev = 1, h = static_cast<unsigned long>(rest);
    BigInt k_prev = 0, k = 1;
    double frac = rest - static_cast<double>(static_cast<unsigned long>(rest));
    const BigInt cap(static_cast<unsigned long>(max_den));
    for (int iter = 0; iter < 64 && frac > 1e-300; ++iter) {
        double inv = 1.0 / frac;
        auto a = static_cast<unsigned long>(inv);
        frac = inv - static_cast<double>(a);
        BigInt k_next = BigInt(a) * k + k_prev;
        if (k_next > cap) {
            // Semiconvergent check: largest t with t*k + k_prev <= cap.
            BigInt t = (cap - k_prev) / k;
            if (t > 0) {
                BigInt hs = t * h + h_prev, ks = t * k + k_prev;
                mpq_class semi(hs, ks), conv(h, k), target(rest);
                if (::abs(mpq_class(semi - target)) < ::abs(mpq_class(conv - target))) {
                    h = hs;
                    k = ks;
                }
            }
            break;
        }
        BigInt h_next = BigInt(a) * h + h_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    Rational r(h, k);
    return negative ? -r : r;
}

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(long re) : re_(re) {}
    GaussianRational(int re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) fail(ErrorKind::DivideByZero, "Gaussian rational division by zero");
        Rational n = o.norm2();
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << "(" << z.re_ << (z.im_.sign() < 0 ? " - " : " + ") << abs(z.im_) << "i)";
    }

private:
    Rational re_;
    Rational im_;
};

enum class GaussianOp { Add, Sub, Mul, Div, Conj };

/// Single entry point for field arithmetic in Q(i); Conj ignores b.
inline GaussianRational gaussian_arith(const GaussianRational& a, const GaussianRational& b, GaussianOp op) {
    switch (op) {
    case GaussianOp::Add: return a + b;
    case GaussianOp::Sub: return a - b;
    case GaussianOp::Mul: return a * b;
    case GaussianOp::Div: return a / b;
    case GaussianOp::Conj: return a.conj();
    }
    fail(ErrorKind::InvalidInput, "unknown Gaussian rational operation");
}

} // namespace minertia
