#ifndef JSOB_MATRIX_HPP
#define JSOB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jsob/poly.hpp"
#include "jsob/ratfunc.hpp"
#include "jsob/rational.hpp"

namespace jsob {

inline bool is_zero_value(const BigRational& v) { return v == 0; }
inline bool is_zero_value(const Poly& v) { return v.is_zero(); }
inline bool is_zero_value(const RationalFunction& v) { return v.is_zero(); }

/// Row-major dense matrix over an exact scalar type.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    std::vector<T> col(std::size_t c) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!is_zero_value(v)) return false;
        return true;
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix out(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<BigRational>;

namespace detail {

template <class T>
T det_laplace(const Matrix<T>& a, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t n = a.rows();
    if (row == n) return T(1);
    T acc(0);
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t c = cols[k];
        if (!is_zero_value(a(row, c))) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
            T minor = det_laplace(a, cols, row + 1);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
            if (!is_zero_value(minor)) {
                T term = a(row, c) * minor;
                if (sign > 0)
                    acc = acc + term;
                else
                    acc = acc - term;
            }
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace detail

/// Division-free cofactor expansion; valid over any commutative ring.
template <class T>
T det_laplace(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<std::size_t> cols(a.cols());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return detail::det_laplace(a, cols, 0);
}

/// Gaussian elimination over a field.
template <class T>
T det_gauss(Matrix<T> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero_value(a(piv, k))) ++piv;
        if (piv == n) return T(0);
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            det = T(0) - det;
        }
        det = det * a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (is_zero_value(a(r, k))) continue;
            T f = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(r, c) = a(r, c) - f * a(k, c);
        }
    }
    return det;
}

/// Cofactor expansion for small sizes, elimination above.
template <class T>
T determinant(const Matrix<T>& a) {
    if (a.rows() <= 4) return det_laplace(a);
    return det_gauss(a);
}

/// Fraction-free (Bareiss) determinant over the ring of polynomials; every
/// intermediate division is exact.
inline Poly det_bareiss(Matrix<Poly> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Poly(1);
    Poly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) return Poly();
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c)
                a(r, c) = exact_div(a(k, k) * a(r, c) - a(r, k) * a(k, c), prev);
            a(r, k) = Poly();
        }
        prev = a(k, k);
    }
    Poly d = a(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

/// Cofactor expansion for small sizes, Bareiss elimination above.
inline Poly determinant(const Matrix<Poly>& a) {
    if (a.rows() <= 4) return det_laplace(a);
    return det_bareiss(a);
}

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
}

inline std::size_t rank(RationalMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(piv, k));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            BigRational f = a(i, c) / a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
        }
        ++r;
    }
    return r;
}

/// Rank of a list of equal-length vectors.
inline std::size_t rank_of(const std::vector<std::vector<BigRational>>& vectors) {
    if (vectors.empty() || vectors.front().empty()) {
        return 0;
    }
    RationalMatrix m(vectors.size(), vectors.front().size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors[i].size(); ++j) m(i, j) = vectors[i][j];
    return rank(std::move(m));
}

/// Whether `candidate` lies in the span of `basis` (the empty span is {0}).
inline bool in_span(const std::vector<std::vector<BigRational>>& basis, const std::vector<BigRational>& candidate) {
    std::vector<std::vector<BigRational>> with = basis;
    with.push_back(candidate);
    return rank_of(with) == rank_of(basis);
}

/// Solves a x = b exactly; nullopt when a is singular.
inline std::optional<std::vector<BigRational>> solve(RationalMatrix a, std::vector<BigRational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || a(r, k) == 0) continue;
            BigRational f = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
            b[r] -= f * b[k];
        }
    }
    for (std::size_t k = 0; k < n; ++k) b[k] /= a(k, k);
    return b;
}

}  // namespace jsob

#endif  // JSOB_MATRIX_HPP
