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

#ifndef BEZKIT_BRAID_HPP
#define BEZKIT_BRAID_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bezkit/bezout.hpp"
#include "bezkit/bivariate.hpp"
#include "bezkit/implicitize.hpp"
#include "bezkit/rational_function.hpp"
#include "bezkit/roots.hpp"
#include "bezkit/series.hpp"

namespace bezkit {

/// Degree-2 rational self-map data of the plane: (x,y) ↦ (p1/p0, p2/p0).
/// The curve under study is the pair of coordinate axes; maps given on two
/// arbitrary intersecting lines are moved here first (see to_axes).
template <typename T>
struct PlaneRationalMap {
    BivariatePolynomial<T> p0, p1, p2;
};

enum class Axis { X_AXIS, Y_AXIS };

/// The iterated derivative-ratio data of one branch: D_1..D_k on the x-axis
/// (parameter derivatives taken along y = 0) or E_1..E_k on the y-axis.
template <typename T>
struct BranchSequence {
    Axis axis;
    std::vector<RationalFunction<T>> functions;
};

struct IntersectionReport {
    std::complex<double> image_x1, image_x2;
    bool is_real = true;
    std::optional<int> minimal_index;       // empty: branches never separate (DIVERGES)
    std::optional<int> paper_multiplicity;  // minimal_index + 1 when finite
    std::optional<int> twist_count;         // equals paper_multiplicity: that many full twists
};

namespace detail {

template <typename T>
Polynomial<T> axis_restriction(const BivariatePolynomial<T>& f, Axis axis) {
    return axis == Axis::X_AXIS ? f.restrict_y0() : f.restrict_x0();
}

}  // namespace detail

/// Builds D_1..D_k (x-axis) or E_1..E_k (y-axis):
///   D_1 = r2' / r1',   D_j = D_{j-1}' / r1',
/// all primes being derivatives in the axis parameter, with r_i = p_i/p0
/// restricted to the axis. The E recursion is the same with the roles of
/// the variables swapped, seeded from E_1 — each family is self-recursive.
template <typename T>
BranchSequence<T> de_sequence(const PlaneRationalMap<T>& m, Axis axis, std::size_t depth) {
    const auto q0 = detail::axis_restriction(m.p0, axis);
    if (q0.is_zero())
        throw PreconditionError("degenerate-projection", "p0 vanishes identically on the axis");
    const RationalFunction<T> r1(detail::axis_restriction(m.p1, axis), q0);
    const RationalFunction<T> r2(detail::axis_restriction(m.p2, axis), q0);
    const RationalFunction<T> r1d = r1.derivative();
    if (r1d.is_zero())
        throw PreconditionError("degenerate-projection",
                                "first image coordinate is constant on the axis");
    BranchSequence<T> seq{axis, {}};
    seq.functions.reserve(depth);
    RationalFunction<T> cur = r2.derivative() / r1d;
    for (std::size_t j = 0; j < depth; ++j) {
        if (j > 0) cur = cur.derivative() / r1d;
        seq.functions.push_back(cur);
    }
    return seq;
}

namespace detail {

template <typename T>
std::pair<T, T> image_through_axis(const PlaneRationalMap<T>& m, const T& param, Axis axis) {
    const T zero = T(0);
    const T x = axis == Axis::X_AXIS ? param : zero;
    const T y = axis == Axis::X_AXIS ? zero : param;
    const T v0 = m.p0.eval(x, y);
    if (is_zero(v0))
        throw PreconditionError("domain-error", "p0 vanishes at the requested preimage");
    return {m.p1.eval(x, y) / v0, m.p2.eval(x, y) / v0};
}

inline std::complex<double> eval_complex(const RationalFunction<Rational>& f,
                                         const std::complex<double>& z) {
    const auto d = embed_complex(f.den()).eval(z);
    if (std::abs(d) < 1e-14)
        throw PreconditionError("domain-error", "branch function has a pole at the point");
    return embed_complex(f.num()).eval(z) / d;
}

}  // namespace detail

/// Minimal separation index of the two branch families through an axis
/// crossing: the smallest i with D_i(x0) ≠ E_i(y0), compared exactly. The
/// report carries the image point, the multiplicity i+1 the index certifies,
/// and the matching count of full twists of the local braid. No separation
/// up to depth_cap reports DIVERGES (empty index).
template <typename T>
IntersectionReport multiplicity_index(const PlaneRationalMap<T>& m, const T& x0, const T& y0,
                                      std::size_t depth_cap = 8) {
    static_assert(is_exact_scalar_v<T>, "exact path; use multiplicity_index_at for floats");
    const auto via_x = detail::image_through_axis(m, x0, Axis::X_AXIS);
    const auto via_y = detail::image_through_axis(m, y0, Axis::Y_AXIS);
    if (via_x.first != via_y.first || via_x.second != via_y.second)
        throw PreconditionError("not-an-intersection",
                                "the two preimages map to different points");

    const auto ds = de_sequence(m, Axis::X_AXIS, depth_cap);
    const auto es = de_sequence(m, Axis::Y_AXIS, depth_cap);

    IntersectionReport report;
    report.image_x1 = to_complex(via_x.first);
    report.image_x2 = to_complex(via_x.second);
    report.is_real = report.image_x1.imag() == 0.0 && report.image_x2.imag() == 0.0;
    for (std::size_t i = 0; i < depth_cap; ++i)
        if (ds.functions[i].eval(x0) != es.functions[i].eval(y0)) {
            report.minimal_index = static_cast<int>(i + 1);
            report.paper_multiplicity = static_cast<int>(i + 2);
            report.twist_count = static_cast<int>(i + 2);
            break;
        }
    return report;
}

/// Floating variant for complex preimages (needed when the image conics
/// cross at non-real points): the branch functions stay exact and symbolic,
/// only their evaluation and comparison run in floats, with tolerance tol.
inline IntersectionReport multiplicity_index_at(const PlaneRationalMap<Rational>& m,
                                                const std::complex<double>& x0,
                                                const std::complex<double>& y0,
                                                std::size_t depth_cap = 8, double tol = 1e-9) {
    const auto ds = de_sequence(m, Axis::X_AXIS, depth_cap);
    const auto es = de_sequence(m, Axis::Y_AXIS, depth_cap);

    auto image = [&m](const std::complex<double>& s, Axis axis) {
        const std::complex<double> zero(0.0);
        const auto x = axis == Axis::X_AXIS ? s : zero;
        const auto y = axis == Axis::X_AXIS ? zero : s;
        auto at = [&](const BivariatePolynomial<Rational>& f) {
            std::complex<double> acc = 0.0;
            const auto& g = f.grid();
            for (std::size_t i = g.size(); i-- > 0;) {
                std::complex<double> row = 0.0;
                for (std::size_t j = g[i].size(); j-- > 0;) row = row * y + g[i][j].to_double();
                acc = acc * x + row;
            }
            return acc;
        };
        const auto v0 = at(m.p0);
        if (std::abs(v0) < 1e-14)
            throw PreconditionError("domain-error", "p0 vanishes at the requested preimage");
        return std::pair{at(m.p1) / v0, at(m.p2) / v0};
    };
    const auto via_x = image(x0, Axis::X_AXIS);
    const auto via_y = image(y0, Axis::Y_AXIS);
    if (std::abs(via_x.first - via_y.first) > tol || std::abs(via_x.second - via_y.second) > tol)
        throw PreconditionError("not-an-intersection",
                                "the two preimages map to different points");

    IntersectionReport report;
    report.image_x1 = via_x.first;
    report.image_x2 = via_x.second;
    report.is_real = std::abs(report.image_x1.imag()) <= 1e-7 &&
                     std::abs(report.image_x2.imag()) <= 1e-7;
    for (std::size_t i = 0; i < depth_cap; ++i) {
        const auto d = detail::eval_complex(ds.functions[i], x0);
        const auto e = detail::eval_complex(es.functions[i], y0);
        if (std::abs(d - e) > tol) {
            report.minimal_index = static_cast<int>(i + 1);
            report.paper_multiplicity = static_cast<int>(i + 2);
            report.twist_count = static_cast<int>(i + 2);
            break;
        }
    }
    return report;
}

/// Independent oracle for the separation index: expresses each branch as a
/// graph x2 = f(x1) near the crossing by truncated series reversion and
/// composition, and returns the order of vanishing of their difference.
/// Empty result means the branches agree to every computed order.
template <typename T>
std::optional<int> branch_contact_order(const PlaneRationalMap<T>& m, const T& x0, const T& y0,
                                        std::size_t depth_cap = 8) {
    static_assert(is_exact_scalar_v<T>, "series oracle is exact-only");
    const auto via_x = detail::image_through_axis(m, x0, Axis::X_AXIS);
    const auto via_y = detail::image_through_axis(m, y0, Axis::Y_AXIS);
    if (via_x.first != via_y.first || via_x.second != via_y.second)
        throw PreconditionError("not-an-intersection",
                                "the two preimages map to different points");

    const std::size_t order = depth_cap + 1;
    auto branch_graph = [&m, order](const T& at, Axis axis) {
        const Polynomial<T> shift{at, T(1)};  // parameter = at + s
        const auto q0 = detail::axis_restriction(m.p0, axis).compose(shift);
        const auto q1 = detail::axis_restriction(m.p1, axis).compose(shift);
        const auto q2 = detail::axis_restriction(m.p2, axis).compose(shift);
        const PowerSeries<T> s0(order, q0);
        if (is_zero(s0.coeff(0)))
            throw PreconditionError("domain-error", "p0 vanishes at the requested preimage");
        const PowerSeries<T> f1 = PowerSeries<T>(order, q1) / s0;
        PowerSeries<T> f2 = PowerSeries<T>(order, q2) / s0;
        PowerSeries<T> to_invert = f1;
        to_invert.coeff(0) = T(0);  // local image coordinate u = x1 − x1(crossing)
        const PowerSeries<T> w = to_invert.revert();
        return f2.compose(w);
    };
    const auto diff = branch_graph(x0, Axis::X_AXIS) - branch_graph(y0, Axis::Y_AXIS);
    const auto v = diff.valuation();
    if (!v) return std::nullopt;
    if (*v == 0)
        throw InvariantViolation("contact-order",
                                 "branch graphs disagree at order zero despite a common image");
    return static_cast<int>(*v);
}

namespace detail {

/// View of a bivariate polynomial as a univariate polynomial in y whose
/// coefficients are polynomials in x.
template <typename T>
Polynomial<Polynomial<T>> as_poly_in_y(const BivariatePolynomial<T>& f) {
    const auto& g = f.grid();
    if (g.empty()) return {};
    std::vector<Polynomial<T>> cols(g[0].size());
    for (std::size_t j = 0; j < g[0].size(); ++j) {
        std::vector<T> col(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) col[i] = g[i][j];
        cols[j] = Polynomial<T>(std::move(col));
    }
    return Polynomial<Polynomial<T>>(std::move(cols));
}

/// Eliminates y between two curves via the determinant of their Bezout
/// matrix over the coefficient ring Q[x]; vanishes exactly at the x
/// coordinates of common points.
template <typename T>
Polynomial<T> eliminate_y(const BivariatePolynomial<T>& a, const BivariatePolynomial<T>& b) {
    const auto pa = as_poly_in_y(a), pb = as_poly_in_y(b);
    const auto bez = bezout_matrix(pa, pb);
    if (bez.size() == 0)
        throw PreconditionError("degenerate-restriction",
                                "curves do not involve the second variable");
    return det(bez.entries);
}

inline bool close(const std::complex<double>& a, const std::complex<double>& b, double tol) {
    return std::abs(a - b) <= tol;
}

}  // namespace detail

/// Implicit equations of the images of the two axes, as canonical conics.
template <typename T>
std::pair<BivariatePolynomial<T>, BivariatePolynomial<T>> image_conics(
    const PlaneRationalMap<T>& m) {
    auto one_axis = [&m](Axis axis) {
        try {
            return implicitize(RationalTriple<T>::make(detail::axis_restriction(m.p0, axis),
                                                       detail::axis_restriction(m.p1, axis),
                                                       detail::axis_restriction(m.p2, axis)));
        } catch (const PreconditionError& e) {
            throw PreconditionError("degenerate-restriction", e.what());
        }
    };
    return {one_axis(Axis::X_AXIS), one_axis(Axis::Y_AXIS)};
}

struct MonodromyDescriptor {
    std::vector<IntersectionReport> points;  // sorted by image coordinates
};

/// Global classification data of the image curve: every common point of the
/// two image conics, located by exact elimination plus floating root
/// extraction, pulled back to the axes and fed through the separation-index
/// analysis. The multiset of (is_real, twist_count) entries determines the
/// braid monodromy of a degree-2 map up to equivalence.
inline MonodromyDescriptor monodromy_descriptor(const PlaneRationalMap<Rational>& m,
                                                std::size_t depth_cap = 8, double tol = 1e-9) {
    constexpr double kCluster = 1e-7;
    constexpr double kMatch = 1e-6;

    const auto [c1, c2] = image_conics(m);
    if (c1 == c2)
        throw PreconditionError("coincident-conics", "the two image conics are identical");

    const Polynomial<Rational> resultant = detail::eliminate_y(c1, c2);
    if (resultant.is_zero())
        throw PreconditionError("coincident-conics", "the image conics share a component");

    MonodromyDescriptor out;
    if (resultant.degree() == 0) return out;  // conics never meet at finite points

    std::vector<std::complex<double>> x1s = poly_roots(resultant);
    x1s.erase(std::unique(x1s.begin(), x1s.end(),
                          [&](const auto& a, const auto& b) { return detail::close(a, b, kCluster); }),
              x1s.end());

    const auto ec1 = c1, ec2 = c2;
    auto eval_c = [](const BivariatePolynomial<Rational>& c, const std::complex<double>& x,
                     const std::complex<double>& y) {
        std::complex<double> acc = 0.0;
        const auto& g = c.grid();
        for (std::size_t i = g.size(); i-- > 0;) {
            std::complex<double> row = 0.0;
            for (std::size_t j = g[i].size(); j-- > 0;) row = row * y + g[i][j].to_double();
            acc = acc * x + row;
        }
        return acc;
    };
    auto slice_in_y = [](const BivariatePolynomial<Rational>& c, const std::complex<double>& x) {
        // c(x, ·) as a complex univariate polynomial
        const auto nested = detail::as_poly_in_y(c);
        std::vector<std::complex<double>> coeffs(nested.coeffs().size());
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            coeffs[j] = embed_complex(nested.coeffs()[j]).eval(x);
        return Polynomial<std::complex<double>>(std::move(coeffs));
    };

    std::vector<std::pair<std::complex<double>, std::complex<double>>> intersections;
    for (const auto& x1 : x1s) {
        Polynomial<std::complex<double>> slice = slice_in_y(ec1, x1);
        const BivariatePolynomial<Rational>* other = &ec2;
        if (!slice.degree() || *slice.degree() < 1) {
            slice = slice_in_y(ec2, x1);
            other = &ec1;
        }
        if (!slice.degree() || *slice.degree() < 1) continue;
        double scale = 0.0;
        for (const auto& c : slice.coeffs()) scale = std::max(scale, std::abs(c));
        for (const auto& x2 : poly_roots(slice)) {
            if (std::abs(eval_c(*other, x1, x2)) > kMatch * std::max(1.0, scale)) continue;
            bool seen = false;
            for (const auto&[px, py] : intersections)
                if (detail::close(px, x1, kCluster) && detail::close(py, x2, kCluster)) seen = true;
            if (!seen) intersections.emplace_back(x1, x2);
        }
    }

    // pull each intersection back to one preimage parameter per axis
    auto preimage_on = [&m, kMatch](Axis axis, const std::complex<double>& x1,
                                    const std::complex<double>& x2)
        -> std::optional<std::complex<double>> {
        const auto q0 = embed_complex(detail::axis_restriction(m.p0, axis));
        const auto q1 = embed_complex(detail::axis_restriction(m.p1, axis));
        const auto q2 = embed_complex(detail::axis_restriction(m.p2, axis));
        // r1(s) = x1  ⇔  q1(s) − x1·q0(s) = 0
        Polynomial<std::complex<double>> fiber = q1 - Polynomial<std::complex<double>>{x1} * q0;
        if (!fiber.degree() || *fiber.degree() < 1) return std::nullopt;
        std::vector<std::complex<double>> candidates = poly_roots(fiber);
        std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        for (const auto& s : candidates) {
            const auto d = q0.eval(s);
            if (std::abs(d) < 1e-12) continue;
            if (std::abs(q2.eval(s) / d - x2) <= kMatch * 10) return s;
        }
        return std::nullopt;
    };

    for (const auto& [x1, x2] : intersections) {
        const auto sx = preimage_on(Axis::X_AXIS, x1, x2);
        const auto sy = preimage_on(Axis::Y_AXIS, x1, x2);
        if (!sx || !sy) continue;  // on one conic's closure only, not a crossing of the image
        out.points.push_back(multiplicity_index_at(m, *sx, *sy, depth_cap, tol));
    }

    std::sort(out.points.begin(), out.points.end(), [](const IntersectionReport& a,
                                                       const IntersectionReport& b) {
        if (a.image_x1.real() != b.image_x1.real()) return a.image_x1.real() < b.image_x1.real();
        if (a.image_x1.imag() != b.image_x1.imag()) return a.image_x1.imag() < b.image_x1.imag();
        if (a.image_x2.real() != b.image_x2.real()) return a.image_x2.real() < b.image_x2.real();
        return a.image_x2.imag() < b.image_x2.imag();
    });
    return out;
}

/// Line a·x + b·y + c = 0.
template <typename T>
struct Line {
    T a, b, c;
};

/// Affine change of variables taking two intersecting lines to the
/// coordinate axes: the first line becomes the x-axis (its points get
/// parameter u), the second the y-axis. The branch analysis above is
/// written for the axes only, so arbitrary line pairs enter through here.
template <typename T>
PlaneRationalMap<T> to_axes(const PlaneRationalMap<T>& m, const Line<T>& l1, const Line<T>& l2) {
    const T det = l1.a * l2.b - l2.a * l1.b;
    if (is_zero(det)) throw PreconditionError("parallel-lines", "the two lines do not intersect");
    const T px = (l1.b * l2.c - l2.b * l1.c) / det;
    const T py = (l2.a * l1.c - l1.a * l2.c) / det;

    using BP = BivariatePolynomial<T>;
    // x = px + b1·u + b2·v, y = py − a1·u − a2·v maps v=0 onto line 1, u=0 onto line 2
    const BP fx = BP::constant(px) + BP::monomial(1, 0, l1.b) + BP::monomial(0, 1, l2.b);
    const BP fy = BP::constant(py) + BP::monomial(1, 0, -l1.a) + BP::monomial(0, 1, -l2.a);
    return {m.p0.substitute(fx, fy), m.p1.substitute(fx, fy), m.p2.substitute(fx, fy)};
}

}  // namespace bezkit

#endif  // BEZKIT_BRAID_HPP
