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

#ifndef BEZKIT_ROOTS_HPP
#define BEZKIT_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include "bezkit/polynomial.hpp"

namespace bezkit {

struct RootOptions {
    int max_iterations = 1000;
    double tol = 1e-12;
};

/// All complex roots of p (with multiplicity, as a cluster for multiple
/// roots) by Durand–Kerner simultaneous iteration. Initial guesses sit on a
/// slightly rotated circle of radius 1 + max|coeff| so they never start in a
/// symmetric trap. Each returned root r satisfies |p(r)| ≤ tol·(1 + Σ|c_k|).
inline std::vector<std::complex<double>> poly_roots(const Polynomial<std::complex<double>>& p,
                                                    const RootOptions& opts = {}) {
    auto deg = p.degree();
    if (!deg || *deg < 1)
        throw PreconditionError("degree-error", "root finding needs degree >= 1");
    const std::size_t n = static_cast<std::size_t>(*deg);

    // monic normalization
    std::vector<std::complex<double>> c = p.coeffs();
    const std::complex<double> lead = c.back();
    for (auto& x : c) x /= lead;
    const Polynomial<std::complex<double>> monic{std::vector<std::complex<double>>(c)};

    double maxc = 0.0, norm1 = 0.0;
    for (const auto& x : p.coeffs()) {
        maxc = std::max(maxc, std::abs(x));
        norm1 += std::abs(x);
    }
    const double radius = 1.0 + maxc;

    std::vector<std::complex<double>> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.35;
        z[k] = std::polar(radius, angle);
    }

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        double max_step = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == 0.0) {
                // collided guesses: nudge and retry next sweep
                z[k] += std::complex<double>(1e-8, 1e-8);
                max_step = 1.0;
                continue;
            }
            const std::complex<double> step = monic.eval(z[k]) / denom;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
        }
        if (max_step < opts.tol) break;
    }

    double worst = 0.0;
    for (const auto& r : z) worst = std::max(worst, std::abs(p.eval(r)));
    if (worst > opts.tol * (1.0 + norm1)) {
        std::ostringstream msg;
        msg << "root iteration stalled; worst residual " << worst;
        throw PreconditionError("convergence-error", msg.str());
    }

    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

template <typename T>
std::vector<std::complex<double>> poly_roots(const Polynomial<T>& p, const RootOptions& opts = {}) {
    return poly_roots(embed_complex(p), opts);
}

}  // namespace bezkit

#endif  // BEZKIT_ROOTS_HPP
