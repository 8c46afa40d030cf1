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

#ifndef BEZKIT_HANKEL_HPP
#define BEZKIT_HANKEL_HPP

#include <complex>
#include <cstddef>
#include <sstream>
#include <vector>

#include "bezkit/bezout.hpp"
#include "bezkit/roots.hpp"

namespace bezkit {

/// Matrix whose (i,j) entry depends only on i+j, stored as the generator of
/// its anti-diagonals: entry(i,j) = generator[i+j], generator length 2n−1.
template <typename T>
struct HankelMatrix {
    std::size_t n = 0;
    std::vector<T> generator;

    Matrix<T> to_matrix() const {
        Matrix<T> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = generator[i + j];
        return m;
    }
};

namespace detail {

/// Collapses a full matrix to generator form, verifying anti-diagonal
/// constancy exactly on the way.
template <typename T>
HankelMatrix<T> to_hankel(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    HankelMatrix<T> h{n, std::vector<T>(n ? 2 * n - 1 : 0, T(0))};
    for (std::size_t s = 0; s < h.generator.size(); ++s) {
        std::size_t i0 = s < n ? 0 : s - n + 1;
        h.generator[s] = m(i0, s - i0);
        for (std::size_t i = i0; i <= std::min(s, n - 1); ++i)
            if (m(i, s - i) != h.generator[s])
                throw InvariantViolation("hankel-structure",
                                         "inverse is not constant on an anti-diagonal");
    }
    return h;
}

}  // namespace detail

/// Exact inverse of B(p,q) at default size, returned in Hankel generator
/// form. The Hankel structure itself is re-verified entry by entry rather
/// than assumed.
template <typename T>
HankelMatrix<T> bezout_inverse(const Polynomial<T>& p, const Polynomial<T>& q) {
    static_assert(is_exact_scalar_v<T>, "exact inversion needs field scalars");
    const std::size_t n = detail::default_bezout_size(p, q);
    if (n == 0)
        throw PreconditionError("degree-error", "Bezout inverse needs a nonconstant pair");
    auto b = bezout_matrix(p, q, n);
    const std::size_t r = rank(b.entries);
    if (r < n) {
        std::ostringstream msg;
        msg << "Bezout matrix is singular with kernel dimension " << (n - r);
        throw PreconditionError("singular-matrix", msg.str());
    }
    return detail::to_hankel(inverse(std::move(b.entries)));
}

/// Floating-point reconstruction of the same inverse from the roots x_k of
/// p: generator[s] = Σ_k x_k^s / (q(x_k)·p'(x_k)). Requires the equal-degree
/// squarefree coprime setting in which that formula is valid; all three
/// hypotheses are checked exactly before any floats appear.
template <typename T>
HankelMatrix<std::complex<double>> hankel_from_roots(const Polynomial<T>& p,
                                                     const Polynomial<T>& q,
                                                     const RootOptions& opts = {}) {
    static_assert(is_exact_scalar_v<T>, "hypotheses are checked exactly");
    auto dp = p.degree(), dq = q.degree();
    if (!dp || !dq || *dp != *dq || *dp < 1)
        throw PreconditionError("degree-error", "root-sum formula needs deg p = deg q >= 1");
    const std::size_t n = static_cast<std::size_t>(*dp);
    if (gcd(p, p.derivative()).degree() != 0)
        throw PreconditionError("multiple-zero", "p has a multiple zero");
    if (gcd(p, q).degree() != 0)
        throw PreconditionError("common-zero", "p and q share a zero");

    const auto roots = poly_roots(p, opts);
    const auto pd = embed_complex(p.derivative());
    const auto qf = embed_complex(q);

    HankelMatrix<std::complex<double>> h{n, std::vector<std::complex<double>>(2 * n - 1, 0.0)};
    for (const auto& x : roots) {
        const std::complex<double> weight = 1.0 / (qf.eval(x) * pd.eval(x));
        std::complex<double> power = 1.0;
        for (std::size_t s = 0; s < h.generator.size(); ++s) {
            h.generator[s] += weight * power;
            power *= x;
        }
    }
    return h;
}

enum class HalfPlaneVerdict { ALL_UPPER, NOT_ALL_UPPER, BOUNDARY };

inline const char* to_string(HalfPlaneVerdict v) {
    switch (v) {
        case HalfPlaneVerdict::ALL_UPPER: return "ALL_UPPER";
        case HalfPlaneVerdict::NOT_ALL_UPPER: return "NOT_ALL_UPPER";
        default: return "BOUNDARY";
    }
}

struct HermiteResult {
    HalfPlaneVerdict verdict;
    std::vector<Rational> minors;  // leading principal minors of (1/2i)·B(p, p̄), exactly real
};

/// Whether every zero of p lies in the open upper half-plane, decided
/// exactly: form M = (1/2i)·B(p, p̄) with p̄ the coefficient-conjugate, then
/// apply Sylvester's criterion to the exact leading principal minors. M is
/// Hermitian and its minors are real by construction; both facts are
/// asserted, not assumed. A zero minor reports BOUNDARY (p shares a zero
/// with p̄: a real root or a conjugate pair straddling the axis).
inline HermiteResult hermite_upper_halfplane(const Polynomial<GaussianRational>& p) {
    auto dp = p.degree();
    if (!dp || *dp < 1)
        throw PreconditionError("degree-error", "half-plane test needs degree >= 1");
    const std::size_t n = static_cast<std::size_t>(*dp);

    const auto pbar = p.conj_coeffs();
    auto b = bezout_matrix(p, pbar, n);
    const GaussianRational half_over_i(Rational(0), Rational(-1, 2));  // 1/(2i)
    Matrix<GaussianRational> m = half_over_i * b.entries;
    if (m != m.conj_transpose())
        throw InvariantViolation("hermitian-violation", "(1/2i)B(p, conj p) is not Hermitian");

    HermiteResult result{HalfPlaneVerdict::ALL_UPPER, {}};
    bool any_zero = false, all_positive = true;
    for (const auto& minor : leading_principal_minors(m)) {
        if (!minor.imag().is_zero())
            throw InvariantViolation("hermitian-violation", "Hermitian minor has imaginary part");
        result.minors.push_back(minor.real());
        if (minor.real().is_zero()) any_zero = true;
        else if (minor.real().sign() < 0) all_positive = false;
    }
    result.verdict = any_zero        ? HalfPlaneVerdict::BOUNDARY
                     : all_positive ? HalfPlaneVerdict::ALL_UPPER
                                    : HalfPlaneVerdict::NOT_ALL_UPPER;
    return result;
}

}  // namespace bezkit

#endif  // BEZKIT_HANKEL_HPP
