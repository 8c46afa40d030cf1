// Copyright 2026 The bezkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BEZKIT_MATRIX_HPP
#define BEZKIT_MATRIX_HPP

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "bezkit/polynomial.hpp"
#include "bezkit/scalar.hpp"

namespace bezkit {

/// Dense row-major matrix over an arbitrary commutative scalar ring.
template <typename T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : r_(rows), c_(cols), d_(rows * cols, std::move(fill)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    /// Builds from nested initializer rows; all rows must agree in length.
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        d_.reserve(r_ * c_);
        for (const auto& row : rows) {
            if (row.size() != c_) throw PreconditionError("shape-error", "ragged matrix rows");
            for (const auto& x : row) d_.push_back(x);
        }
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix conj_transpose() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = conj_of((*this)(i, j));
        return m;
    }

    Matrix operator-() const {
        Matrix m(r_, c_);
        for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] = -d_[k];
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix m(a.r_, a.c_);
        for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] + b.d_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix m(a.r_, a.c_);
        for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] - b.d_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw PreconditionError("shape-error", "matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix m(a.r_, a.c_);
        for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = s * a.d_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const T& s) { return s * a; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.r_; ++i) {
            os << (i ? "\n[" : "[");
            for (std::size_t j = 0; j < m.c_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]";
        }
        return os;
    }

   private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_)
            throw PreconditionError("shape-error", "matrix shape mismatch");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != v.size()) throw PreconditionError("shape-error", "matrix-vector shape mismatch");
    std::vector<T> out(m.rows(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

/// u^T M v without conjugation — the bilinear (not sesquilinear) form.
template <typename T>
T bilinear(const std::vector<T>& u, const Matrix<T>& m, const std::vector<T>& v) {
    if (u.size() != m.rows()) throw PreconditionError("shape-error", "bilinear form shape mismatch");
    std::vector<T> mv = mat_vec(m, v);
    T acc = T(0);
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * mv[i];
    return acc;
}

template <typename T>
double max_abs_entry(const Matrix<T>& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            double a = magnitude(m(i, j));
            if (a > best) best = a;
        }
    return best;
}

/// Determinant. Exact scalars (and polynomial entries) go through Bareiss
/// fraction-free elimination: every division is exact, so the result is the
/// true determinant with no rounding and controlled intermediate growth.
/// Floating scalars use plain LU with partial pivoting by magnitude.
template <typename T>
T det(Matrix<T> m) {
    if (!m.is_square()) throw PreconditionError("shape-error", "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    int sign = 1;
    if constexpr (is_exact_scalar_v<T>) {
        T prev = T(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::size_t piv = k;
            while (piv < n && is_zero(m(piv, k))) ++piv;
            if (piv == n) return T(0);
            if (piv != k) {
                for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
                m(i, k) = T(0);
            }
            prev = m(k, k);
        }
        return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
    } else {
        T result = T(1);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (magnitude(m(i, k)) > magnitude(m(piv, k))) piv = i;
            if (is_zero(m(piv, k))) return T(0);
            if (piv != k) {
                for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
                sign = -sign;
            }
            result = result * m(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                T f = m(i, k) / m(k, k);
                for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            }
        }
        return sign > 0 ? result : -result;
    }
}

/// Row rank by exact Gaussian elimination (field scalars only).
template <typename T>
std::size_t rank(Matrix<T> m) {
    static_assert(is_exact_scalar_v<T>, "exact rank needs field scalars");
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, col))) continue;
            T f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Rank together with an exact basis of the null space, via reduced row
/// echelon form: each free column yields one basis vector with a unit in
/// its own slot and the negated pivot-row entries above.
template <typename T>
std::pair<std::size_t, std::vector<std::vector<T>>> rank_kernel(Matrix<T> m) {
    static_assert(is_exact_scalar_v<T>, "exact kernel needs field scalars");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && is_zero(m(piv, col))) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(r, j), m(piv, j));
        T d = m(r, col);
        for (std::size_t j = col; j < cols; ++j) m(r, j) = m(r, j) / d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<std::vector<T>> kernel;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<T> v(cols, T(0));
        v[col] = T(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m(i, col);
        kernel.push_back(std::move(v));
    }
    return {r, std::move(kernel)};
}

/// Inverse by Gauss-Jordan on [M | I]. Exact scalars take the first nonzero
/// pivot; floating scalars the largest by magnitude.
template <typename T>
Matrix<T> inverse(Matrix<T> m) {
    if (!m.is_square()) throw PreconditionError("shape-error", "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        if constexpr (is_exact_scalar_v<T>) {
            while (piv < n && is_zero(m(piv, k))) ++piv;
            if (piv == n) throw PreconditionError("singular-matrix", "matrix is not invertible");
        } else {
            for (std::size_t i = k + 1; i < n; ++i)
                if (magnitude(m(i, k)) > magnitude(m(piv, k))) piv = i;
            if (is_zero(m(piv, k)))
                throw PreconditionError("singular-matrix", "matrix is not invertible");
        }
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        T d = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = m(k, j) / d;
            inv(k, j) = inv(k, j) / d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) continue;
            T f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

/// Determinants of the k-by-k top-left submatrices, k = 1..n.
template <typename T>
std::vector<T> leading_principal_minors(const Matrix<T>& m) {
    if (!m.is_square())
        throw PreconditionError("shape-error", "principal minors of non-square matrix");
    std::vector<T> out;
    out.reserve(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Matrix<T> sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
        out.push_back(det(std::move(sub)));
    }
    return out;
}

/// hermitian = true asserts M = M* up front, which is what Sylvester-style
/// uses require before trusting the minor sequence.
template <typename T>
std::vector<T> leading_principal_minors(const Matrix<T>& m, bool hermitian) {
    if (hermitian && m != m.conj_transpose())
        throw PreconditionError("symmetry-violation", "matrix does not equal its conjugate transpose");
    return leading_principal_minors(m);
}

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    m(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return m;
}

}  // namespace bezkit

#endif  // BEZKIT_MATRIX_HPP
