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

#ifndef BEZKIT_VESSEL_HPP
#define BEZKIT_VESSEL_HPP

#include <complex>
#include <cstddef>

#include "bezkit/bezout.hpp"
#include "bezkit/implicitize.hpp"
#include "bezkit/matrix.hpp"

namespace bezkit {

using CMatrix = Matrix<std::complex<double>>;

/// Single-operator colligation data: A on the inner space H (dim h), the
/// window Phi: H → E (dim e), and a selfadjoint signature sigma on E.
struct OperatorNode {
    CMatrix A;      // h×h
    CMatrix Phi;    // e×h
    CMatrix sigma;  // e×e, Hermitian
};

/// Two-operator vessel data; selfadjointness of the four E-operators and
/// commutativity of A1, A2 are part of the definition and are what the
/// residual report measures.
struct CommutativeVessel {
    CMatrix A1, A2;   // h×h
    CMatrix Phi;      // e×h
    CMatrix sigma1, sigma2, gamma_in, gamma_out;  // e×e
};

struct VesselResiduals {
    double colligation1 = 0;  // Phi* sigma1 Phi − (1/i)(A1 − A1*)
    double colligation2 = 0;  // Phi* sigma2 Phi − (1/i)(A2 − A2*)
    double gamma_in = 0;      // gamma_in Phi − (sigma1 Phi A2* − sigma2 Phi A1*)
    double gamma_out = 0;     // gamma_out Phi − (sigma1 Phi A2 − sigma2 Phi A1)
    double linkage = 0;       // gamma_out − gamma_in − i(sigma1 PP* sigma2 − sigma2 PP* sigma1)
    double commutativity = 0; // A1 A2 − A2 A1

    double colligation() const { return std::max(colligation1, colligation2); }
    double worst() const {
        return std::max({colligation1, colligation2, gamma_in, gamma_out, linkage});
    }
};

namespace detail {

inline void check_node_shapes(const CMatrix& a, const CMatrix& phi, const CMatrix& sigma) {
    if (!a.is_square() || !sigma.is_square() || phi.cols() != a.rows() ||
        phi.rows() != sigma.rows())
        throw PreconditionError("shape-error", "node matrices have incompatible shapes");
}

}  // namespace detail

/// Max-entry magnitude of Φ*σΦ − (1/i)(A − A*); zero exactly when the data
/// is a colligation (node).
inline double node_residual(const OperatorNode& c) {
    detail::check_node_shapes(c.A, c.Phi, c.sigma);
    const std::complex<double> minus_i(0.0, -1.0);  // 1/i
    const CMatrix lhs = c.Phi.conj_transpose() * c.sigma * c.Phi;
    const CMatrix rhs = minus_i * (c.A - c.A.conj_transpose());
    return max_abs_entry(lhs - rhs);
}

/// Residuals of the five defining identities (two colligations, the input
/// and output gamma conditions, the linkage between them), plus the
/// commutativity of A1 and A2 reported alongside.
inline VesselResiduals vessel_residuals(const CommutativeVessel& v) {
    detail::check_node_shapes(v.A1, v.Phi, v.sigma1);
    detail::check_node_shapes(v.A2, v.Phi, v.sigma2);
    if (v.gamma_in.rows() != v.sigma1.rows() || !v.gamma_in.is_square() ||
        v.gamma_out.rows() != v.sigma1.rows() || !v.gamma_out.is_square())
        throw PreconditionError("shape-error", "gamma matrices have incompatible shapes");

    const std::complex<double> i_unit(0.0, 1.0);
    const std::complex<double> minus_i(0.0, -1.0);
    const CMatrix phi_star = v.Phi.conj_transpose();

    VesselResiduals r;
    r.colligation1 = max_abs_entry(phi_star * v.sigma1 * v.Phi -
                                   minus_i * (v.A1 - v.A1.conj_transpose()));
    r.colligation2 = max_abs_entry(phi_star * v.sigma2 * v.Phi -
                                   minus_i * (v.A2 - v.A2.conj_transpose()));
    r.gamma_in = max_abs_entry(v.gamma_in * v.Phi - (v.sigma1 * v.Phi * v.A2.conj_transpose() -
                                                     v.sigma2 * v.Phi * v.A1.conj_transpose()));
    r.gamma_out = max_abs_entry(v.gamma_out * v.Phi -
                                (v.sigma1 * v.Phi * v.A2 - v.sigma2 * v.Phi * v.A1));
    const CMatrix pp = v.Phi * phi_star;
    r.linkage = max_abs_entry(v.gamma_out - v.gamma_in -
                              i_unit * (v.sigma1 * pp * v.sigma2 - v.sigma2 * pp * v.sigma1));
    r.commutativity = max_abs_entry(v.A1 * v.A2 - v.A2 * v.A1);
    return r;
}

/// p(A) by Horner over matrices, coefficients embedded into complex floats.
template <typename T>
CMatrix matrix_polynomial(const Polynomial<T>& p, const CMatrix& a) {
    if (!a.is_square()) throw PreconditionError("shape-error", "polynomial of non-square matrix");
    const std::size_t h = a.rows();
    CMatrix acc(h, h);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc = acc * a;
        const auto c = to_complex(p.coeffs()[k]);
        for (std::size_t i = 0; i < h; ++i) acc(i, i) += c;
    }
    return acc;
}

/// Assembles the vessel generated by one node and a polynomial triple:
///   A1 = p1(A)·p0(A)⁻¹,  A2 = p2(A)·p0(A)⁻¹,
///   σ1 = B(p1,p0)⊗σ,  σ2 = B(p2,p0)⊗σ,  γ^in = B(p1,p2)⊗σ,
/// with γ^out completed from the linkage identity using the supplied Φ'.
/// The Bezout factors are oriented so that the vessel's discriminant pencil
///   det(γ^in + x1·σ2 − x2·σ1) = det(B(p1,p2) + x1·B(p2,p0) + x2·B(p0,p1))
/// is literally the implicitization pencil of the same triple; with the
/// opposite orientation the first colligation identity is unsatisfiable for
/// any Φ' (it would force a negative-semidefinite form to have a positive
/// trace), so this is the only consistent reading.
///
/// Φ' is the caller's responsibility: it lives on E' = E^n (dimension e·n),
/// and this function validates shapes only — run vessel_residuals on the
/// result to certify it.
template <typename T>
CommutativeVessel vessel_from_node(const OperatorNode& c, const Polynomial<T>& p0,
                                   const Polynomial<T>& p1, const Polynomial<T>& p2,
                                   std::size_t n, const CMatrix& phi_prime) {
    detail::check_node_shapes(c.A, c.Phi, c.sigma);
    for (const Polynomial<T>* p : {&p0, &p1, &p2})
        if (auto d = p->degree(); d && static_cast<std::size_t>(*d) > n)
            throw PreconditionError("size-error", "triple degree exceeds the declared size");
    const std::size_t h = c.A.rows(), e = c.sigma.rows();
    if (phi_prime.rows() != e * n || phi_prime.cols() != h)
        throw PreconditionError("shape-error", "Phi' must map H into the n-fold sum of E");

    const CMatrix p0a = matrix_polynomial(p0, c.A);
    CMatrix p0a_inv(h, h);
    try {
        p0a_inv = inverse(p0a);
    } catch (const PreconditionError&) {
        throw PreconditionError("invertibility-error", "p0(A) is singular");
    }
    // crude but sufficient conditioning gate: ‖p0(A)‖·‖p0(A)⁻¹‖ in max-entry norm
    const double cond = max_abs_entry(p0a) * max_abs_entry(p0a_inv) *
                        static_cast<double>(h) * static_cast<double>(h);
    if (cond > 1e12)
        throw PreconditionError("invertibility-error", "p0(A) is numerically singular");

    const CMatrix a1 = matrix_polynomial(p1, c.A) * p0a_inv;
    const CMatrix a2 = matrix_polynomial(p2, c.A) * p0a_inv;

    auto embed = [n](const BezoutMatrix<T>& b) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = to_complex(b.entries(i, j));
        return m;
    };
    const CMatrix sigma1 = kron(embed(bezout_matrix(p1, p0, n)), c.sigma);
    const CMatrix sigma2 = kron(embed(bezout_matrix(p2, p0, n)), c.sigma);
    const CMatrix gamma_in = kron(embed(bezout_matrix(p1, p2, n)), c.sigma);

    const std::complex<double> i_unit(0.0, 1.0);
    const CMatrix pp = phi_prime * phi_prime.conj_transpose();
    const CMatrix gamma_out =
        gamma_in + i_unit * (sigma1 * pp * sigma2 - sigma2 * pp * sigma1);

    return {a1, a2, phi_prime, sigma1, sigma2, gamma_in, gamma_out};
}

/// The discriminant curve of the vessel built from a triple: identical, by
/// construction, to the implicitization of the same triple.
template <typename T>
BivariatePolynomial<T> vessel_discriminant(const Polynomial<T>& p0, const Polynomial<T>& p1,
                                           const Polynomial<T>& p2, std::size_t n) {
    auto triple = RationalTriple<T>::make(p0, p1, p2);
    if (triple.n != n)
        throw PreconditionError("size-error", "declared size differs from the triple's max degree");
    return implicitize(triple);
}

}  // namespace bezkit

#endif  // BEZKIT_VESSEL_HPP
