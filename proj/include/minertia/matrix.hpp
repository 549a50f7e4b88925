#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace minertia {

/// Row-major dense matrix over an exact field.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) fail(ErrorKind::InvalidInput, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
        check_same_shape(a, b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
        check_same_shape(a, b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }
    friend DenseMatrix operator*(const T& s, DenseMatrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorKind::InvalidInput, "matrix product shape mismatch");
        DenseMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

private:
    static void check_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidInput, "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ComplexMatrix = DenseMatrix<GaussianRational>;
using RationalMatrix = DenseMatrix<Rational>;

inline ComplexMatrix conjugate_transpose(const ComplexMatrix& m) {
    ComplexMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
    return t;
}

namespace detail {

template <typename T>
bool is_zero(const T& x) {
    return x.is_zero();
}

// Row echelon form in place; returns (rank, determinant sign/product for square input).
template <typename T>
std::pair<std::size_t, T> eliminate(DenseMatrix<T>& m) {
    std::size_t rank = 0;
    T det(1);
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) {
            det = T(0);
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
            det = -det;
        }
        T inv = T(1) / m(rank, col);
        det *= m(rank, col);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, col))) continue;
            T f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    if (rank < m.rows() || m.rows() != m.cols()) det = T(0);
    return {rank, det};
}

} // namespace detail

template <typename T>
std::size_t matrix_rank(DenseMatrix<T> m) {
    return detail::eliminate(m).first;
}

template <typename T>
T determinant(DenseMatrix<T> m) {
    if (!m.is_square()) fail(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    if (m.rows() == 0) return T(1);
    return detail::eliminate(m).second;
}

/// q x q matrix over Q(i) equal to its own conjugate transpose.
/// Conjugate symmetry is validated once, at construction; instances are immutable.
class HermitianMatrix {
public:
    HermitianMatrix() = default;

    explicit HermitianMatrix(ComplexMatrix entries) : m_(std::move(entries)) {
        if (!m_.is_square()) fail(ErrorKind::NotHermitian, "matrix is not square");
        if (m_.rows() == 0) fail(ErrorKind::InvalidInput, "matrix size must be positive");
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = i; j < m_.cols(); ++j)
                if (m_(i, j) != m_(j, i).conj())
                    fail(ErrorKind::NotHermitian, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                      ") is not the conjugate of entry (" + std::to_string(j) +
                                                      "," + std::to_string(i) + ")");
    }

    HermitianMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
        : HermitianMatrix(ComplexMatrix(rows)) {}

    static HermitianMatrix zero(std::size_t q) { return HermitianMatrix(ComplexMatrix(q, q)); }
    static HermitianMatrix identity(std::size_t q) { return HermitianMatrix(ComplexMatrix::identity(q)); }
    static HermitianMatrix diagonal(std::span<const Rational> d) {
        ComplexMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return HermitianMatrix(std::move(m));
    }
    static HermitianMatrix diagonal(std::initializer_list<Rational> d) {
        return diagonal(std::span<const Rational>(d.begin(), d.size()));
    }

    std::size_t q() const { return m_.rows(); }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const ComplexMatrix& entries() const { return m_; }

    bool is_zero() const {
        for (std::size_t i = 0; i < q(); ++i)
            for (std::size_t j = 0; j < q(); ++j)
                if (!m_(i, j).is_zero()) return false;
        return true;
    }

    Rational trace() const {
        Rational t(0);
        for (std::size_t i = 0; i < q(); ++i) t += m_(i, i).re();
        return t;
    }

    /// True for c*I, including the zero matrix.
    bool is_scalar() const {
        for (std::size_t i = 0; i < q(); ++i)
            for (std::size_t j = 0; j < q(); ++j)
                if (i == j ? m_(i, i) != m_(0, 0) : !m_(i, j).is_zero()) return false;
        return true;
    }

    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
        return HermitianMatrix(a.m_ + b.m_);
    }
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
        return HermitianMatrix(a.m_ - b.m_);
    }
    HermitianMatrix operator-() const { return HermitianMatrix(GaussianRational(-1) * m_); }
    friend HermitianMatrix operator*(const Rational& s, const HermitianMatrix& a) {
        return HermitianMatrix(GaussianRational(s) * a.m_);
    }

    /// this - s*I
    HermitianMatrix shifted(const Rational& s) const {
        ComplexMatrix m = m_;
        for (std::size_t i = 0; i < q(); ++i) m(i, i) -= GaussianRational(s);
        return HermitianMatrix(std::move(m));
    }

private:
    ComplexMatrix m_;
};

/// det(xI - X) with rational coefficients, via the Faddeev-LeVerrier recurrence over Q(i).
inline RationalPolynomial characteristic_polynomial(const HermitianMatrix& x) {
    const std::size_t n = x.q();
    const ComplexMatrix& a = x.entries();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    ComplexMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        ComplexMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += GaussianRational(c[n - k + 1]);
        m = std::move(next);
        ComplexMatrix am = a * m;
        GaussianRational tr;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        if (!tr.is_real()) fail(ErrorKind::Inconsistency, "characteristic polynomial has a non-real coefficient");
        c[n - k] = -tr.re() / Rational(static_cast<long>(k));
    }
    return RationalPolynomial(std::move(c));
}

} // namespace minertia
