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

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <vector>

#include "doctest.h"

#include "bezkit/braid.hpp"

using namespace bezkit;

namespace {

using P = Polynomial<Rational>;
using BP = BivariatePolynomial<Rational>;
using Map = PlaneRationalMap<Rational>;

BP grid(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> g;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (long c : row) r.emplace_back(c);
        g.push_back(std::move(r));
    }
    return BP(std::move(g));
}

// the three study maps: (x, y) ↦ (x + y, ·)
Map tangent_map() {  // second coordinate x^2 + y: images meet transversally
    return {grid({{1}}), grid({{0, 1}, {1}}), grid({{0, 1}, {0}, {1}})};
}
Map osculating_map() {  // x^2 + 2y^2: second-order contact at the origin
    return {grid({{1}}), grid({{0, 1}, {1}}), grid({{0, 0, 2}, {0}, {1}})};
}
Map coincident_map() {  // x^2 + y^2: both axes land on the same parabola
    return {grid({{1}}), grid({{0, 1}, {1}}), grid({{0, 0, 1}, {0}, {1}})};
}

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("derivative-ratio sequences on both axes") {
    const auto ds = de_sequence(tangent_map(), Axis::X_AXIS, 3);
    REQUIRE(ds.functions.size() == 3);
    CHECK(ds.functions[0].num() == P{Rational(0), Rational(2)});  // D1 = 2x
    CHECK(ds.functions[1].num() == P{Rational(2)});               // D2 = 2
    CHECK(ds.functions[2].is_zero());

    const auto es = de_sequence(tangent_map(), Axis::Y_AXIS, 2);
    CHECK(es.functions[0].num() == P{Rational(1)});  // E1 = 1
    CHECK(es.functions[1].is_zero());
}

TEST_CASE("degenerate projections are rejected") {
    // p1 constant on the axis: r1' = 0
    const Map flat{grid({{1}}), grid({{5}}), grid({{0, 1}})};
    CHECK_THROWS_WITH_AS(de_sequence(flat, Axis::X_AXIS, 2),
                         doctest::Contains("degenerate-projection"), PreconditionError);
    // p0 identically zero on the x-axis
    const Map pole{grid({{0, 1}}), grid({{0, 1}, {1}}), grid({{0, 1}})};
    CHECK_THROWS_WITH_AS(de_sequence(pole, Axis::X_AXIS, 2),
                         doctest::Contains("degenerate-projection"), PreconditionError);
}

TEST_CASE("separation index at the origin across the three study maps") {
    const auto r1 = multiplicity_index(tangent_map(), Rational(0), Rational(0));
    CHECK(r1.minimal_index == 1);
    CHECK(r1.paper_multiplicity == 2);
    CHECK(r1.twist_count == 2);
    CHECK(r1.is_real);

    const auto r2 = multiplicity_index(osculating_map(), Rational(0), Rational(0));
    CHECK(r2.minimal_index == 2);
    CHECK(r2.paper_multiplicity == 3);

    const auto r3 = multiplicity_index(coincident_map(), Rational(0), Rational(0));
    CHECK(!r3.minimal_index);  // branches never separate: DIVERGES
    CHECK(!r3.paper_multiplicity);
}

TEST_CASE("second crossing of the tangent map") {
    const auto r = multiplicity_index(tangent_map(), Rational(1), Rational(1));
    CHECK(r.minimal_index == 1);
    CHECK(r.image_x1 == std::complex<double>(1.0, 0.0));
    CHECK(r.image_x2 == std::complex<double>(1.0, 0.0));
}

TEST_CASE("preimages of different points are refused") {
    CHECK_THROWS_WITH_AS(multiplicity_index(tangent_map(), Rational(1), Rational(2)),
                         doctest::Contains("not-an-intersection"), PreconditionError);
}

TEST_CASE("series oracle reproduces the separation index") {
    CHECK(branch_contact_order(tangent_map(), Rational(0), Rational(0)) == 1);
    CHECK(branch_contact_order(osculating_map(), Rational(0), Rational(0)) == 2);
    CHECK(!branch_contact_order(coincident_map(), Rational(0), Rational(0)));
    CHECK(branch_contact_order(tangent_map(), Rational(1), Rational(1)) == 1);
}

TEST_CASE("image conics of the axes") {
    const auto [c1, c2] = image_conics(tangent_map());
    CHECK(c1.coeff(0, 1) == Rational(1));
    CHECK(c1.coeff(2, 0) == Rational(-1));  // x2 = x1^2
    CHECK(c2.coeff(0, 1) == Rational(1));
    CHECK(c2.coeff(1, 0) == Rational(-1));  // x2 = x1
}

TEST_CASE("full descriptor of the tangent map") {
    const auto d = monodromy_descriptor(tangent_map());
    REQUIRE(d.points.size() == 2);
    CHECK(d.points[0].image_x1.real() == doctest::Approx(0.0));
    CHECK(d.points[0].minimal_index == 1);
    CHECK(d.points[0].is_real);
    CHECK(d.points[1].image_x1.real() == doctest::Approx(1.0));
    CHECK(d.points[1].minimal_index == 1);
    CHECK(d.points[1].is_real);
}

TEST_CASE("tangential contact appears once with index two") {
    const auto d = monodromy_descriptor(osculating_map());
    REQUIRE(d.points.size() == 1);
    CHECK(d.points[0].minimal_index == 2);
    CHECK(d.points[0].twist_count == 3);
    CHECK(d.points[0].is_real);
}

TEST_CASE("identical image conics cannot be classified") {
    CHECK_THROWS_WITH_AS(monodromy_descriptor(coincident_map()),
                         doctest::Contains("coincident-conics"), PreconditionError);
}

TEST_CASE("maps given on arbitrary lines move to the axes first") {
    // lines x − y = 0 and x + y = 0 meet at the origin; the substitution is
    // x = −u + v, y = −u − v (line directions (b, −a) anchored at the crossing)
    const Line<Rational> l1{Rational(1), Rational(-1), Rational(0)};
    const Line<Rational> l2{Rational(1), Rational(1), Rational(0)};
    const auto moved = to_axes(tangent_map(), l1, l2);
    for (long uu = -2; uu <= 2; ++uu)
        for (long vv = -2; vv <= 2; ++vv) {
            const Rational u(uu), v(vv);
            const Rational x = -u + v, y = -u - v;
            CHECK(moved.p1.eval(u, v) == tangent_map().p1.eval(x, y));
            CHECK(moved.p2.eval(u, v) == tangent_map().p2.eval(x, y));
        }

    const Line<Rational> l3{Rational(1), Rational(1), Rational(-1)};
    CHECK_THROWS_WITH_AS(to_axes(tangent_map(), l2, l3),
                         doctest::Contains("parallel-lines"), PreconditionError);
}

TEST_CASE("opposed parabolas meet once with second-order contact") {
    // restrictions x^2 and −y^2 give image conics x2 = ±x1^2, which meet
    // only at the origin (tangentially, opposite curvatures: index 2)
    const Map m{grid({{1}}), grid({{0, 1}, {1}}), grid({{0, 0, -1}, {0}, {1}})};
    const auto [c1, c2] = image_conics(m);
    CHECK(c1.coeff(2, 0) * c2.coeff(2, 0) == Rational(-1));
    const auto d = monodromy_descriptor(m);
    REQUIRE(d.points.size() == 1);
    CHECK(d.points[0].is_real);
    CHECK(d.points[0].minimal_index == 2);
}

TEST_CASE("swapping the variables swaps the two sequences") {
    const auto transpose = [](const BP& f) {
        const auto& g = f.grid();
        std::size_t cols = 0;
        for (const auto& row : g) cols = std::max(cols, row.size());
        std::vector<std::vector<Rational>> t(cols, std::vector<Rational>(g.size()));
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g[i].size(); ++j) t[j][i] = g[i][j];
        return BP(std::move(t));
    };
    for (const Map& m : {tangent_map(), osculating_map()}) {
        const Map swapped{transpose(m.p0), transpose(m.p1), transpose(m.p2)};
        const auto d = de_sequence(m, Axis::X_AXIS, 4);
        const auto e = de_sequence(swapped, Axis::Y_AXIS, 4);
        REQUIRE(d.functions.size() == e.functions.size());
        for (std::size_t k = 0; k < d.functions.size(); ++k)
            CHECK(d.functions[k] == e.functions[k]);
    }
}

TEST_CASE("first sequence entry is the slope of the image conic") {
    // implicit differentiation of the x-axis image c(x1,x2) = 0 must agree
    // with D1 = r2'/r1' wherever both are defined
    const auto partial = [](const BP& f, bool by_x1) {
        const auto& g = f.grid();
        std::vector<std::vector<Rational>> out;
        for (std::size_t i = by_x1 ? 1 : 0; i < g.size(); ++i) {
            std::vector<Rational> row;
            for (std::size_t j = by_x1 ? 0 : 1; j < g[i].size(); ++j)
                row.push_back(Rational(long(by_x1 ? i : j)) * g[i][j]);
            out.push_back(std::move(row));
        }
        if (out.empty()) out.push_back({});
        return BP(std::move(out));
    };
    // third map sends the x-axis onto the hyperbola x2(1 − x1) = x1, so the
    // slope comparison sees a genuine denominator
    const Map hyper{grid({{1}, {-1}}), grid({{0, 1}, {1}, {-1}}), grid({{0, 0, 1}, {1}})};
    for (const Map& m : {tangent_map(), osculating_map(), hyper}) {
        const auto c = image_conics(m).first;
        const auto cx1 = partial(c, true), cx2 = partial(c, false);
        const auto d1 = de_sequence(m, Axis::X_AXIS, 1).functions[0];
        for (long k = 2; k <= 6; ++k) {
            const Rational t(k);
            const Rational x1 = m.p1.eval(t, Rational(0)) / m.p0.eval(t, Rational(0));
            const Rational x2 = m.p2.eval(t, Rational(0)) / m.p0.eval(t, Rational(0));
            REQUIRE(!is_zero(cx2.eval(x1, x2)));
            CHECK(d1.eval(t) == -cx1.eval(x1, x2) / cx2.eval(x1, x2));
        }
    }
}

TEST_CASE("rescaling an axis parameter does not move the index") {
    const auto rescale = [](const BP& f, const Rational& a, const Rational& c) {
        const auto& g = f.grid();
        std::vector<std::vector<Rational>> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            Rational ai(1);
            for (std::size_t s = 0; s < i; ++s) ai = ai * a;
            Rational scale = ai;
            for (std::size_t j = 0; j < g[i].size(); ++j) {
                out[i].push_back(scale * g[i][j]);
                scale = scale * c;
            }
        }
        return BP(std::move(out));
    };
    const Rational a(2), c(-3);
    for (const Map& m : {tangent_map(), osculating_map()}) {
        const Map ms{rescale(m.p0, a, c), rescale(m.p1, a, c), rescale(m.p2, a, c)};
        const auto before = multiplicity_index(m, Rational(0), Rational(0));
        const auto after = multiplicity_index(ms, Rational(0), Rational(0));
        CHECK(before.minimal_index == after.minimal_index);
    }
    // the off-origin crossing of the tangent map sits at the scaled preimage
    const Map ms{rescale(tangent_map().p0, a, c), rescale(tangent_map().p1, a, c),
                 rescale(tangent_map().p2, a, c)};
    const auto r = multiplicity_index(ms, Rational(1, 2), Rational(-1, 3));
    CHECK(r.minimal_index == 1);
    CHECK(r.image_x1 == std::complex<double>(1.0, 0.0));
}

TEST_CASE("separation index equals the series contact order on random maps") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<long> small(-3, 3);
    const auto nonzero = [&] {
        long v = 0;
        while (v == 0) v = small(rng);
        return v;
    };
    int finite_cases = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const Map m{grid({{1, small(rng)}, {small(rng)}}),
                    grid({{0, nonzero(), small(rng)}, {nonzero(), small(rng)}, {small(rng)}}),
                    grid({{small(rng), small(rng), small(rng)},
                          {small(rng), small(rng)},
                          {small(rng)}})};
        const auto report = multiplicity_index(m, Rational(0), Rational(0));
        const auto oracle = branch_contact_order(m, Rational(0), Rational(0));
        CHECK(report.minimal_index == oracle);
        if (report.minimal_index) ++finite_cases;
    }
    CHECK(finite_cases >= 20);
}

TEST_CASE("complex crossings are picked up and flagged non-real") {
    // x-axis sweeps the parabola x2 = x1^2, y-axis the hyperbola
    // x2(1 − x1) = x1; they cross at the origin and at the complex pair
    // x1^2 − x1 + 1 = 0 (the elimination cubic is −x1(x1^2 − x1 + 1))
    const Map m{grid({{1, -1}}),                  // 1 − y
                grid({{0, 1, -1}, {1}}),          // x + y − y^2
                grid({{0, 1}, {0}, {1}})};        // x^2 + y
    const auto d = monodromy_descriptor(m);
    REQUIRE(d.points.size() == 3);
    for (const auto& p : d.points)
        CHECK(p.minimal_index == 1);  // every crossing here is transversal
    CHECK(d.points[0].is_real);
    CHECK(std::abs(d.points[0].image_x1) < 1e-9);
    // non-real points come in a conjugate pair, adjacent under the sort
    CHECK(!d.points[1].is_real);
    CHECK(!d.points[2].is_real);
    CHECK(d.points[1].image_x1.real() == doctest::Approx(0.5));
    CHECK(d.points[1].image_x1.real() == doctest::Approx(d.points[2].image_x1.real()));
    CHECK(d.points[1].image_x1.imag() == doctest::Approx(-d.points[2].image_x1.imag()));
}

}  // TEST_SUITE
