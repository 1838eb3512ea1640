#ifndef SOLITON_EXACTNUM_MATRIX_HPP
#define SOLITON_EXACTNUM_MATRIX_HPP

#include "soliton/errors.hpp"
#include "soliton/exactnum/ratfunc.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace soliton::exactnum {

/// Dense row-major matrix over an exact field (Rat or RatFunc).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator*=(const T& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) { return a.multiply(b); }
    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) { return a.apply(x); }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix multiply(const Matrix& b) const;
    std::vector<T> apply(const std::vector<T>& x) const;
    /// Element-wise conversion, e.g. Rat -> RatFunc.
    template <typename U>
    Matrix<U> cast() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
template <typename T>
T determinant(const Matrix<T>& a);

/// Solves A x = rhs exactly by fraction-free elimination with a final
/// back-substitution, then re-checks A x = rhs. Throws SingularMatrix when no
/// nonzero pivot exists in some column.
template <typename T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& rhs);

/// Solves on the coordinate subspace selected by `mask`: unknowns outside the
/// mask are fixed to zero and only the masked rows/columns are eliminated. The
/// full residual A x - rhs must vanish (so rhs must lie in the image of the
/// masked block); otherwise SingularMatrix is thrown.
template <typename T>
std::vector<T> solve_masked(const Matrix<T>& a, const std::vector<T>& rhs,
                            const std::vector<bool>& mask);

template <typename T>
bool is_zero_vector(const std::vector<T>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <typename T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <typename T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// ---------------------------------------------------------------------------

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
}

template <typename T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

template <typename T>
Matrix<T>& Matrix<T>::operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

template <typename T>
Matrix<T> Matrix<T>::multiply(const Matrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const T& aik = (*this)(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

template <typename T>
std::vector<T> Matrix<T>::apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<T> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!is_zero((*this)(i, j)) && !is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
    return y;
}

template <typename T>
template <typename U>
Matrix<U> Matrix<T>::cast() const {
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = U((*this)(i, j));
    return r;
}

namespace detail {

// In-place Bareiss elimination on an augmented matrix with `n` pivot columns.
// Returns the sign of the row permutation; throws SingularMatrix on a zero column.
template <typename T>
int bareiss_eliminate(Matrix<T>& m, std::size_t n) {
    int sign = 1;
    T prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(m(p, k))) ++p;
        if (p == n)
            throw SingularMatrix("zero pivot column " + std::to_string(k) +
                                 " (determinant is zero)");
        if (p != k) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m.cols(); ++j) {
                // Exact division: the quotient is always a polynomial in the entries.
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = T();
        }
        prev = m(k, k);
    }
    return sign;
}

} // namespace detail

template <typename T>
T determinant(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows() == 0) return T(1);
    Matrix<T> m = a;
    try {
        const int sign = detail::bareiss_eliminate(m, a.rows());
        T d = m(a.rows() - 1, a.rows() - 1);
        return sign < 0 ? -d : d;
    } catch (const SingularMatrix&) {
        return T();
    }
}

template <typename T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("solve requires a square matrix");
    if (rhs.size() != n) throw std::invalid_argument("right-hand side has the wrong length");
    Matrix<T> m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = rhs[i];
    }
    detail::bareiss_eliminate(m, n);
    std::vector<T> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        T acc = m(ii, n);
        for (std::size_t j = ii + 1; j < n; ++j)
            if (!is_zero(m(ii, j))) acc -= m(ii, j) * x[j];
        x[ii] = acc / m(ii, ii);
    }
    if (!is_zero_vector(a.apply(x) - rhs))
        throw std::logic_error("exact solve failed its back-substitution check");
    return x;
}

template <typename T>
std::vector<T> solve_masked(const Matrix<T>& a, const std::vector<T>& rhs,
                            const std::vector<bool>& mask) {
    const std::size_t n = a.rows();
    if (a.cols() != n || rhs.size() != n || mask.size() != n)
        throw std::invalid_argument("solve_masked shape mismatch");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) idx.push_back(i);
    Matrix<T> block(idx.size(), idx.size());
    std::vector<T> sub(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = a(idx[r], idx[c]);
        sub[r] = rhs[idx[r]];
    }
    const std::vector<T> y = solve(block, sub);
    std::vector<T> x(n);
    for (std::size_t r = 0; r < idx.size(); ++r) x[idx[r]] = y[r];
    if (!is_zero_vector(a.apply(x) - rhs))
        throw SingularMatrix("right-hand side leaves the masked subspace");
    return x;
}

} // namespace soliton::exactnum

#endif
