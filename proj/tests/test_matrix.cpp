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

#include "doctest.h"

#include "bezkit/matrix.hpp"
#include "bezkit/polynomial.hpp"

using namespace bezkit;

namespace {
using M = Matrix<Rational>;
}

TEST_SUITE("matrix") {

TEST_CASE("construction and shape checks") {
    const M m{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    CHECK(m.rows() == 2);
    CHECK(m(1, 0) == Rational(3));
    CHECK(M::identity(3)(2, 2) == Rational(1));
    CHECK(M::identity(3)(0, 1) == Rational(0));
    CHECK_THROWS_WITH_AS((M{{Rational(1)}, {Rational(2), Rational(3)}}),
                         doctest::Contains("shape-error"), PreconditionError);
    CHECK_THROWS_AS(m * M::identity(3), PreconditionError);
    CHECK_THROWS_AS(m + M(1, 1), PreconditionError);
}

TEST_CASE("transpose and conjugate transpose") {
    const M m{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    CHECK(m.transpose()(0, 1) == Rational(3));
    const Matrix<GaussianRational> g{{GaussianRational::i()}};
    CHECK(g.conj_transpose()(0, 0) == -GaussianRational::i());
}

TEST_CASE("exact determinant via fraction-free elimination") {
    CHECK(det(M{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == Rational(-2));
    // leading zero forces the row-swap path; sign must flip
    CHECK(det(M{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) == Rational(-1));
    CHECK(det(M{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 5), Rational(1, 7)}}) ==
          Rational(1, 14) - Rational(1, 15));
    const M s{{Rational(2), Rational(0), Rational(1)},
              {Rational(0), Rational(0), Rational(3)},
              {Rational(1), Rational(4), Rational(0)}};
    CHECK(det(s) == Rational(-24));
    CHECK(det(M{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == Rational(0));
}

TEST_CASE("determinant over a polynomial coefficient ring") {
    using P = Polynomial<Rational>;
    const P x = P::monomial(1);
    const Matrix<P> m{{x, P(Rational(1))}, {P(Rational(1)), x}};
    CHECK(det(m) == P{Rational(-1), Rational(0), Rational(1)});
    const Matrix<P> swap{{P(), x}, {x, P()}};
    CHECK(det(swap) == P{Rational(0), Rational(0), Rational(-1)});
}

TEST_CASE("float determinant uses partial pivoting") {
    const Matrix<double> m{{1e-20, 1.0}, {1.0, 1.0}};
    CHECK(det(m) == doctest::Approx(-1.0));
}

TEST_CASE("rank and kernel") {
    const M singular{{Rational(-1), Rational(1)}, {Rational(1), Rational(-1)}};
    CHECK(rank(singular) == 1);
    const auto [r, kernel] = rank_kernel(singular);
    CHECK(r == 1);
    REQUIRE(kernel.size() == 1);
    // kernel vector is (1, 1) up to scale
    CHECK(kernel[0][0] == kernel[0][1]);
    CHECK(kernel[0][0] != Rational(0));
    CHECK(rank(M::identity(4)) == 4);
    CHECK(rank_kernel(M(2, 2, Rational(0))).second.size() == 2);
    // kernel vectors annihilate the matrix
    const M wide{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
    for (const auto& v : rank_kernel(wide).second)
        for (const auto& entry : mat_vec(wide, v)) CHECK(entry == Rational(0));
}

TEST_CASE("exact inverse") {
    const M b{{Rational(0), Rational(-3)}, {Rational(-3), Rational(0)}};
    const auto binv = inverse(b);
    CHECK(binv(0, 1) == Rational(-1, 3));
    CHECK(binv(0, 0) == Rational(0));
    CHECK(b * binv == M::identity(2));
    CHECK_THROWS_WITH_AS(inverse(M(2, 2, Rational(1))), doctest::Contains("singular-matrix"),
                         PreconditionError);
    CHECK_THROWS_AS(inverse(M(2, 3, Rational(1))), PreconditionError);
}

TEST_CASE("leading principal minors") {
    const M b{{Rational(0), Rational(-3)}, {Rational(-3), Rational(0)}};
    const auto minors = leading_principal_minors(b);
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == Rational(0));
    CHECK(minors[1] == Rational(-9));
    const M pd{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}};
    CHECK(leading_principal_minors(pd) == std::vector<Rational>{Rational(2), Rational(3)});
}

TEST_CASE("hermitian-checked minors reject asymmetry") {
    const Matrix<GaussianRational> h{
        {GaussianRational(1), GaussianRational::i()},
        {-GaussianRational::i(), GaussianRational(2)}};
    const auto minors = leading_principal_minors(h, /*hermitian=*/true);
    CHECK(minors[0] == GaussianRational(1));
    CHECK(minors[1] == GaussianRational(1));  // 2 - |i|^2
    const Matrix<GaussianRational> bad{
        {GaussianRational(1), GaussianRational::i()},
        {GaussianRational::i(), GaussianRational(2)}};
    CHECK_THROWS_WITH_AS(leading_principal_minors(bad, true),
                         doctest::Contains("symmetry-violation"), PreconditionError);
}

TEST_CASE("kronecker product blocks follow the left factor") {
    const M a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    const M s{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    const auto k = kron(a, s);
    REQUIRE(k.rows() == 4);
    CHECK(k(0, 1) == Rational(1));   // block (0,0) = 1·s
    CHECK(k(0, 3) == Rational(2));   // block (0,1) = 2·s
    CHECK(k(3, 0) == Rational(3));   // block (1,0) = 3·s
    CHECK(k(2, 3) == Rational(4));   // block (1,1) = 4·s
}

TEST_CASE("bilinear form has no implicit conjugation") {
    const M s{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    const std::vector<Rational> u{Rational(1), Rational(2)}, v{Rational(3), Rational(5)};
    CHECK(bilinear(u, s, v) == Rational(11));  // u^T s v = 1·5 + 2·3
    CHECK(mat_vec(s, v) == std::vector<Rational>{Rational(5), Rational(3)});
}

}  // TEST_SUITE
