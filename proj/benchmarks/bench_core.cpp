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

#include <benchmark/benchmark.h>

#include "bezkit/bezout.hpp"
#include "bezkit/hankel.hpp"
#include "bezkit/implicitize.hpp"

namespace {

using namespace bezkit;

Polynomial<Rational> dense_poly(int degree, long seed) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    long v = seed;
    for (auto& x : c) {
        v = (v * 1103515245 + 12345) % 2048 - 1024;
        x = Rational(v == 0 ? 1 : v, (v & 7) + 1);
    }
    return Polynomial<Rational>(std::move(c));
}

void BM_BezoutConstruct(benchmark::State& state) {
    const auto p = dense_poly(static_cast<int>(state.range(0)), 17);
    const auto q = dense_poly(static_cast<int>(state.range(0)), 23);
    for (auto _ : state) benchmark::DoNotOptimize(bezout_matrix(p, q));
}
BENCHMARK(BM_BezoutConstruct)->Arg(4)->Arg(8)->Arg(16);

void BM_ExactDeterminant(benchmark::State& state) {
    const auto p = dense_poly(static_cast<int>(state.range(0)), 31);
    const auto q = dense_poly(static_cast<int>(state.range(0)), 37);
    const auto b = bezout_matrix(p, q);
    for (auto _ : state) benchmark::DoNotOptimize(det(b.entries));
}
BENCHMARK(BM_ExactDeterminant)->Arg(4)->Arg(8)->Arg(16);

void BM_HankelInverse(benchmark::State& state) {
    // shifted squarefree pair keeps the matrix invertible at every size
    const int n = static_cast<int>(state.range(0));
    Polynomial<Rational> p{Rational(1)}, q{Rational(1)};
    for (int k = 1; k <= n; ++k) {
        p = p * Polynomial<Rational>{Rational(-k), Rational(1)};
        q = q * Polynomial<Rational>{Rational(-k, 2), Rational(1)};
    }
    for (auto _ : state) benchmark::DoNotOptimize(bezout_inverse(p, q));
}
BENCHMARK(BM_HankelInverse)->Arg(4)->Arg(8);

void BM_Implicitize(benchmark::State& state) {
    const auto t = RationalTriple<Rational>::make(
        dense_poly(static_cast<int>(state.range(0)), 41),
        dense_poly(static_cast<int>(state.range(0)), 43),
        dense_poly(static_cast<int>(state.range(0)), 47));
    for (auto _ : state) benchmark::DoNotOptimize(implicitize(t));
}
BENCHMARK(BM_Implicitize)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
