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

#ifndef BEZKIT_BEZOUT_HPP
#define BEZKIT_BEZOUT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bezkit/bivariate.hpp"
#include "bezkit/matrix.hpp"
#include "bezkit/polynomial.hpp"

namespace bezkit {

namespace detail {

/// Coefficient grid of (p(x)q(y) − q(x)p(y)) / (x − y), padded to n×n.
/// Runs over any commutative coefficient ring: the numerator is assembled
/// as a polynomial in x whose coefficients live in T[y], and the division
/// is synthetic division by the monic linear factor (x − y), which needs
/// no ring division at all. The remainder is asserted zero — nonzero would
/// mean the antisymmetry of the numerator failed, i.e. a bug.
template <typename T>
std::vector<std::vector<T>> cayley_grid(const Polynomial<T>& p, const Polynomial<T>& q,
                                        std::size_t n) {
    const std::size_t terms = std::max(p.coeffs().size(), q.coeffs().size());
    if (terms > n + 1) throw PreconditionError("size-error", "requested size below max degree");

    using Inner = Polynomial<T>;
    // numer[k] = coefficient of x^k, an element of T[y]
    std::vector<Inner> numer(terms);
    for (std::size_t k = 0; k < terms; ++k) numer[k] = p.coeff(k) * q - q.coeff(k) * p;

    std::vector<std::vector<T>> grid(n, std::vector<T>(n, T(0)));
    if (terms <= 1) return grid;  // constant or zero numerator in x: quotient is 0

    // synthetic division by (x − y): b_{k−1} = a_k + y·b_k, working downward
    const Inner y = Inner::monomial(1);
    std::vector<Inner> quot(terms - 1);
    Inner carry;  // b_k from the previous (higher) step
    for (std::size_t k = terms; k-- > 1;) {
        carry = numer[k] + y * carry;
        quot[k - 1] = carry;
    }
    Inner remainder = numer[0] + y * carry;
    if (!remainder.is_zero())
        throw InvariantViolation("inexact-division", "cayley numerator not divisible by x - y");

    for (std::size_t i = 0; i < quot.size() && i < n; ++i)
        for (std::size_t j = 0; j < quot[i].coeffs().size() && j < n; ++j)
            grid[i][j] = quot[i].coeffs()[j];
    return grid;
}

template <typename T>
std::size_t default_bezout_size(const Polynomial<T>& p, const Polynomial<T>& q) {
    int d = 0;
    if (auto dp = p.degree()) d = std::max(d, *dp);
    if (auto dq = q.degree()) d = std::max(d, *dq);
    return static_cast<std::size_t>(d);
}

}  // namespace detail

/// The quotient (p(x)q(y) − q(x)p(y)) / (x − y) as an explicit bivariate
/// polynomial; the division is exact, and the result has degree ≤ n−1 in
/// each variable.
template <typename T>
BivariatePolynomial<T> cayley_quotient(const Polynomial<T>& p, const Polynomial<T>& q,
                                       std::size_t n) {
    return BivariatePolynomial<T>(detail::cayley_grid(p, q, n));
}

/// Symmetric n×n matrix B with Σ B_ij x^i y^j equal to the Cayley quotient
/// of (p, q). The source pair is retained so downstream reports can say
/// which polynomials a matrix came from.
template <typename T>
struct BezoutMatrix {
    Matrix<T> entries;
    Polynomial<T> p, q;

    std::size_t size() const { return entries.rows(); }
};

template <typename T>
BezoutMatrix<T> bezout_matrix(const Polynomial<T>& p, const Polynomial<T>& q, std::size_t n) {
    auto grid = detail::cayley_grid(p, q, n);
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = grid[i][j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i))
                throw InvariantViolation("symmetry-violation", "Bezout matrix came out asymmetric");
    return {std::move(m), p, q};
}

/// Default size: n = max degree of the pair (zero polynomials contribute 0).
/// Larger n pads the quotient with zero rows/columns and inflates the kernel
/// by n − max degree; the common-zero count below always uses the default.
template <typename T>
BezoutMatrix<T> bezout_matrix(const Polynomial<T>& p, const Polynomial<T>& q) {
    return bezout_matrix(p, q, detail::default_bezout_size(p, q));
}

/// Vandermonde vector of order k at a point: entry i is d^k/dx^k x^i,
/// i = 0..n−1. Order 0 is the plain (1, x, ..., x^{n−1}).
template <typename T>
std::vector<T> vandermonde(const T& x, std::size_t n, unsigned k = 0) {
    if (n < 1) throw PreconditionError("size-error", "vandermonde needs n >= 1");
    std::vector<T> v(n, T(0));
    T power = T(1);  // x^{i−k}, maintained incrementally
    for (std::size_t i = k; i < n; ++i) {
        long fall = 1;  // i·(i−1)···(i−k+1)
        for (unsigned j = 0; j < k; ++j) fall *= static_cast<long>(i - j);
        v[i] = T(fall) * power;
        power = power * x;
    }
    return v;
}

/// Rank of the column collection {V^j_n(x) : j = 0..order(x)} over the given
/// points; confluent independence makes this the full count for distinct
/// points within budget.
template <typename T>
std::size_t confluent_vandermonde_rank(const std::vector<std::pair<T, unsigned>>& points,
                                       std::size_t n) {
    std::size_t count = 0;
    for (const auto& [x, order] : points) count += order + 1;
    if (count > n)
        throw PreconditionError("size-error", "more confluent vectors than the space dimension");
    Matrix<T> m(n, count);
    std::size_t col = 0;
    for (const auto& [x, order] : points)
        for (unsigned k = 0; k <= order; ++k, ++col) {
            auto v = vandermonde(x, n, k);
            for (std::size_t i = 0; i < n; ++i) m(i, col) = v[i];
        }
    return rank(std::move(m));
}

/// Number of common zeros of p and q counted with multiplicity: the kernel
/// dimension of B(p,q) at default size, which equals deg gcd(p,q).
template <typename T>
std::size_t common_zero_count(const Polynomial<T>& p, const Polynomial<T>& q) {
    if (p.is_zero() && q.is_zero())
        throw PreconditionError("undefined-gcd", "common zeros of two zero polynomials");
    const std::size_t n = detail::default_bezout_size(p, q);
    if (n == 0) return 0;
    auto b = bezout_matrix(p, q, n);
    return n - rank(std::move(b.entries));
}

/// Exact pass/fail record for the four bilinear-form identities the Bezout
/// matrix satisfies, evaluated at caller-chosen sample points.
struct IdentityReport {
    std::size_t samples = 0;
    bool quotient_form_ok = true;     // V^T(x) B V(y) = Cayley quotient
    bool decomposition_ok = true;     // B = B(p,1)q − B(q,1)p under the form
    bool diagonal_ok = true;          // V^T(x) B V(x) = q p' − p q'
    bool arbitrary_vector_ok = true;  // w^T B V(y) decomposition, fixed w

    bool all_ok() const {
        return quotient_form_ok && decomposition_ok && diagonal_ok && arbitrary_vector_ok;
    }
};

/// Checks, exactly, the identities
///   1. V^T(x)·B(p,q)·V(y) = (p(x)q(y) − q(x)p(y))/(x − y)       for x ≠ y
///   2. V^T(x)·B(p,q)·V(y) = V^T(x)·(B(p,1)q(y) − B(q,1)p(y))·V(y)
///   3. V^T(x)·B(p,q)·V(x) = q(x)p'(x) − p(x)q'(x)
///   4. w^T·B(p,q)·V(y)   = w^T·(B(p,1)q(y) − B(q,1)p(y))·V(y)
/// at every sample pair. The witness vector w for 4 is fixed to
/// (1, 2, ..., n). Requesting identity 1 at x = y is a domain error; the
/// diagonal case is exactly what identity 3 covers.
template <typename T>
IdentityReport identity_suite(const Polynomial<T>& p, const Polynomial<T>& q,
                              const std::vector<std::pair<T, T>>& samples) {
    static_assert(is_exact_scalar_v<T>, "identity suite is exact-only");
    const std::size_t n = detail::default_bezout_size(p, q);
    IdentityReport report;
    report.samples = samples.size();
    if (n == 0) return report;  // constant pair: every form is empty, identities hold as 0 = 0

    const auto B = bezout_matrix(p, q, n).entries;
    const auto Bp1 = bezout_matrix(p, Polynomial<T>{T(1)}, n).entries;
    const auto Bq1 = bezout_matrix(q, Polynomial<T>{T(1)}, n).entries;
    const Polynomial<T> dp = p.derivative(), dq = q.derivative();

    std::vector<T> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = T(static_cast<long>(i + 1));

    for (const auto& [x, y] : samples) {
        if (x == y)
            throw PreconditionError("domain-error",
                                    "identity 1 is undefined at x = y; use the diagonal identity");
        const auto Vx = vandermonde(x, n), Vy = vandermonde(y, n);

        const T lhs = bilinear(Vx, B, Vy);
        const T quotient = (p.eval(x) * q.eval(y) - q.eval(x) * p.eval(y)) / (x - y);
        if (lhs != quotient) report.quotient_form_ok = false;

        const Matrix<T> decomposed = Bp1 * q.eval(y) - Bq1 * p.eval(y);
        if (lhs != bilinear(Vx, decomposed, Vy)) report.decomposition_ok = false;

        const T diag = bilinear(Vx, B, Vx);
        if (diag != q.eval(x) * dp.eval(x) - p.eval(x) * dq.eval(x)) report.diagonal_ok = false;

        T wB = T(0), wD = T(0);
        const auto BVy = mat_vec(B, Vy), DVy = mat_vec(decomposed, Vy);
        for (std::size_t i = 0; i < n; ++i) {
            wB += w[i] * BVy[i];
            wD += w[i] * DVy[i];
        }
        if (wB != wD) report.arbitrary_vector_ok = false;
    }
    return report;
}

}  // namespace bezkit

#endif  // BEZKIT_BEZOUT_HPP
