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

#ifndef BEZKIT_IMPLICITIZE_HPP
#define BEZKIT_IMPLICITIZE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bezkit/bezout.hpp"
#include "bezkit/bivariate.hpp"

namespace bezkit {

/// The parametrization data of a rational plane curve t ↦ (p1/p0, p2/p0),
/// sized by the maximum degree of the three polynomials.
template <typename T>
struct RationalTriple {
    Polynomial<T> p0, p1, p2;
    std::size_t n = 0;

    static RationalTriple make(Polynomial<T> p0, Polynomial<T> p1, Polynomial<T> p2) {
        if (p0.is_zero() && p1.is_zero() && p2.is_zero())
            throw PreconditionError("degenerate-triple", "all three polynomials are zero");
        std::size_t n = detail::default_bezout_size(p0, p1);
        n = std::max(n, detail::default_bezout_size(p0, p2));
        return {std::move(p0), std::move(p1), std::move(p2), n};
    }
};

namespace detail {

inline void accumulate_content(Rational& acc, const Rational& c) { acc = rational_gcd(acc, c); }
inline void accumulate_content(Rational& acc, const GaussianRational& c) {
    acc = rational_gcd(acc, c.real());
    acc = rational_gcd(acc, c.imag());
}

inline bool leads_positive(const Rational& c) { return c.sign() > 0; }
inline bool leads_positive(const GaussianRational& c) {
    return c.real().is_zero() ? c.imag().sign() > 0 : c.real().sign() > 0;
}

}  // namespace detail

/// Canonical representative of a curve equation, which is only meaningful up
/// to scalars: divide out the rational content of all coefficient parts, then
/// force the lexicographically-first nonzero coefficient (ascending x power,
/// then ascending y power) to lead positive — real part first, imaginary part
/// when the real part is zero.
template <typename T>
BivariatePolynomial<T> canonicalize_curve(const BivariatePolynomial<T>& delta) {
    if (delta.is_zero()) return delta;
    Rational content(0);
    for (const auto& row : delta.grid())
        for (const auto& c : row) detail::accumulate_content(content, c);
    BivariatePolynomial<T> out = T(Rational(1) / content) * delta;
    for (const auto& row : out.grid())
        for (const auto& c : row) {
            if (is_zero(c)) continue;
            return detail::leads_positive(c) ? out : -out;
        }
    return out;
}

/// det(B_const + x·B_x1 + y·B_x2) as an exact bivariate polynomial. The
/// determinant of an n×n pencil with affine entries has degree ≤ n in each
/// variable, so it is pinned down by exact evaluation on the integer grid
/// {0..n}² followed by tensor-product Newton interpolation, one variable at
/// a time. A spot identity (delta at a grid-independent point equals a
/// directly computed determinant) is the recommended cross-check and lives
/// in the test suite.
template <typename T>
BivariatePolynomial<T> pencil_det(const Matrix<T>& b_const, const Matrix<T>& b_x1,
                                  const Matrix<T>& b_x2, std::size_t n) {
    static_assert(is_exact_scalar_v<T>, "pencil interpolation is exact-only");
    for (const Matrix<T>* m : {&b_const, &b_x1, &b_x2})
        if (m->rows() != n || m->cols() != n)
            throw PreconditionError("shape-error", "pencil matrices must all be n x n");

    std::vector<T> abscissae(n + 1);
    for (std::size_t i = 0; i <= n; ++i) abscissae[i] = T(static_cast<long>(i));

    // values[i] = the univariate slice y ↦ det(B_const + t_i B_x1 + y B_x2)
    std::vector<std::vector<T>> slice_coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const Matrix<T> base = b_const + abscissae[i] * b_x1;
        std::vector<T> column(n + 1);
        for (std::size_t j = 0; j <= n; ++j) column[j] = det(base + abscissae[j] * b_x2);
        slice_coeffs[i] = interpolate(abscissae, column).padded_coeffs(n + 1);
    }

    std::vector<std::vector<T>> grid(n + 1, std::vector<T>(n + 1, T(0)));
    std::vector<T> column(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i <= n; ++i) column[i] = slice_coeffs[i][j];
        const auto in_x = interpolate(abscissae, column).padded_coeffs(n + 1);
        for (std::size_t i = 0; i <= n; ++i) grid[i][j] = in_x[i];
    }
    return BivariatePolynomial<T>(std::move(grid));
}

/// Implicit equation of the image of t ↦ (p1(t)/p0(t), p2(t)/p0(t)): the
/// canonicalized determinant of the Bezout pencil
///   Δ(x1,x2) = det(B(p1,p2) + x1·B(p2,p0) + x2·B(p0,p1)),
/// which vanishes along the parametrization wherever p0 does not.
template <typename T>
BivariatePolynomial<T> implicitize(const RationalTriple<T>& t) {
    if (t.n == 0)
        throw PreconditionError("degree-error", "a triple of constants parametrizes a point, not a curve");
    const auto b12 = bezout_matrix(t.p1, t.p2, t.n);
    const auto b20 = bezout_matrix(t.p2, t.p0, t.n);
    const auto b01 = bezout_matrix(t.p0, t.p1, t.n);
    auto delta = pencil_det(b12.entries, b20.entries, b01.entries, t.n);
    if (delta.is_zero())
        throw PreconditionError("degenerate-triple", "pencil determinant vanishes identically");
    return canonicalize_curve(delta);
}

/// The triple (z^m, z^m·q(z), reversed-conjugate of q) realizing both q(z)
/// and conj(q(1/z̄)) over the common denominator z^m. Both defining rational
/// identities are construction-verified: p1 = q·p0 exactly, and p2's
/// coefficients are the reversed conjugates of q's.
inline RationalTriple<GaussianRational> reciprocal_conjugate_triple(
    const Polynomial<GaussianRational>& q) {
    auto dq = q.degree();
    if (!dq || *dq < 1)
        throw PreconditionError("degree-error", "quadrature map needs a nonconstant polynomial");
    const std::size_t m = static_cast<std::size_t>(*dq);

    const auto p0 = Polynomial<GaussianRational>::monomial(m);
    const auto p1 = p0 * q;
    std::vector<GaussianRational> rev(m + 1, GaussianRational(0));
    for (std::size_t k = 0; k <= m; ++k) rev[m - k] = q.coeff(k).conj();
    const Polynomial<GaussianRational> p2(std::move(rev));

    if (p1 != q * p0)
        throw InvariantViolation("triple-identity", "p1 != q * p0");
    for (std::size_t k = 0; k <= m; ++k)
        if (p2.coeff(m - k) != q.coeff(k).conj())
            throw InvariantViolation("triple-identity", "p2 is not the reversed conjugate of q");
    return RationalTriple<GaussianRational>::make(p0, p1, p2);
}

/// Boundary equation of the quadrature domain q(unit disk): Δ(z, z̄) = 0,
/// where Δ comes from implicitizing the reciprocal-conjugate triple and the
/// two variables are read as z and z̄. Padding the triple to common size can
/// leave pure monomial factors z^a z̄^b in Δ; those never cut the boundary
/// away from the origin, so they are stripped — and the strip is reported,
/// not hidden.
struct QuadratureBoundary {
    BivariatePolynomial<GaussianRational> delta;
    std::size_t removed_z = 0;
    std::size_t removed_zbar = 0;
    RationalTriple<GaussianRational> triple;
};

inline QuadratureBoundary quadrature_boundary(const Polynomial<GaussianRational>& q) {
    auto triple = reciprocal_conjugate_triple(q);
    auto delta = implicitize(triple);

    const auto& g = delta.grid();
    std::size_t min_i = g.size(), min_j = g.empty() ? 0 : g[0].size();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j)
            if (!is_zero(g[i][j])) {
                min_i = std::min(min_i, i);
                min_j = std::min(min_j, j);
            }
    if (min_i > 0 || min_j > 0) {
        std::vector<std::vector<GaussianRational>> stripped;
        for (std::size_t i = min_i; i < g.size(); ++i)
            stripped.emplace_back(g[i].begin() + static_cast<std::ptrdiff_t>(min_j), g[i].end());
        delta = canonicalize_curve(BivariatePolynomial<GaussianRational>(std::move(stripped)));
    }
    return {std::move(delta), min_i, min_j, std::move(triple)};
}

}  // namespace bezkit

#endif  // BEZKIT_IMPLICITIZE_HPP
