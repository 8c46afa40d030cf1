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

// Release gate: every numbered criterion below prints exactly one PASS/FAIL
// line. The binary exits nonzero if any criterion fails. Tolerances and
// runtime budgets are pinned here, next to the checks that use them.

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "bezkit/bezout.hpp"
#include "bezkit/braid.hpp"
#include "bezkit/hankel.hpp"
#include "bezkit/implicitize.hpp"
#include "bezkit/polynomial.hpp"
#include "bezkit/rational.hpp"
#include "bezkit/vessel.hpp"

#ifndef BEZKIT_CLI_PATH
#error "BEZKIT_CLI_PATH must point at the command-line binary"
#endif
#ifndef BEZKIT_GOLDEN_DIR
#error "BEZKIT_GOLDEN_DIR must point at the golden-file directory"
#endif

namespace {

using namespace bezkit;
using P = Polynomial<Rational>;
using GP = Polynomial<GaussianRational>;

constexpr double kIdentitySeconds = 10.0;
constexpr double kKernelSeconds = 20.0;
constexpr double kImplicitizeSeconds = 60.0;
constexpr double kBraidSeconds = 10.0;
constexpr double kRootSumTol = 1e-8;
constexpr double kVesselTol = 1e-10;
constexpr double kNodeTol = 0.0;

std::string g_detail;  // set by a criterion on failure, printed after the line

void note(const std::string& msg) {
    if (g_detail.empty()) g_detail = msg;
}

P random_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c;
    for (int k = 0; k < degree; ++k) c.emplace_back(num(rng), den(rng));
    long lead = 0;
    while (lead == 0) lead = num(rng);
    c.emplace_back(lead, den(rng));
    return P(std::move(c));
}

// criterion 1: the four bilinear-form identities hold exactly on random pairs
bool criterion_identities() {
    std::mt19937 rng(11111);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const P p = random_poly(rng, deg(rng));
        const P q = random_poly(rng, deg(rng));
        std::vector<std::pair<Rational, Rational>> samples;
        for (long k = 0; k < 3; ++k)
            samples.emplace_back(Rational(2 * k + 1, 2), Rational(-(2 * k + 3), 2));
        const auto report = identity_suite(p, q, samples);
        if (!report.all_ok()) {
            note("identity failure at trial " + std::to_string(trial));
            return false;
        }
    }
    return true;
}

// criterion 2: kernel dimension of the coefficient matrix equals deg gcd
bool criterion_kernel_gcd() {
    std::mt19937 rng(22222);
    std::uniform_int_distribution<int> deg_g(0, 4), deg_ab(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const P g = random_poly(rng, deg_g(rng));
        const P p = g * random_poly(rng, deg_ab(rng));
        const P q = g * random_poly(rng, deg_ab(rng));
        const auto expected = gcd(p, q).degree();
        if (!expected || common_zero_count(p, q) != static_cast<std::size_t>(*expected)) {
            note("kernel/gcd mismatch at trial " + std::to_string(trial));
            return false;
        }
    }
    return true;
}

// criterion 3: exact inverses are Hankel and the root-sum formula matches
bool criterion_hankel() {
    std::mt19937 rng(33333);
    std::uniform_int_distribution<int> deg(1, 6);
    int done = 0;
    while (done < 100) {
        const P p = random_poly(rng, deg(rng));
        const P q = random_poly(rng, deg(rng));
        if (gcd(p, q).degree() != 0) continue;
        ++done;
        const auto h = bezout_inverse(p, q);  // throws unless exactly Hankel
        const auto b = bezout_matrix(p, q);
        if (!(b.entries * h.to_matrix() == Matrix<Rational>::identity(h.n))) {
            note("B * B^{-1} != I for a coprime pair");
            return false;
        }
    }

    std::uniform_int_distribution<int> sdeg(2, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = sdeg(rng);
        std::vector<long> pool{-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6};
        std::shuffle(pool.begin(), pool.end(), rng);
        P p{Rational(1)}, q{Rational(1)};
        for (int k = 0; k < d; ++k) {
            p = p * P{Rational(-pool[k]), Rational(1)};
            q = q * P{Rational(-pool[d + k]), Rational(1)};
        }
        const auto exact = bezout_inverse(p, q);
        const auto sums = hankel_from_roots(p, q);
        for (std::size_t k = 0; k < exact.generator.size(); ++k) {
            const double err =
                std::abs(sums.generator[k] - std::complex<double>(exact.generator[k].to_double()));
            if (err > kRootSumTol) {
                note("root-sum generator entry off by " + std::to_string(err));
                return false;
            }
        }
    }

    const auto worked = bezout_inverse(P{Rational(-1), Rational(0), Rational(1)},
                                       P{Rational(-4), Rational(0), Rational(1)});
    const std::vector<Rational> want{Rational(0), Rational(-1, 3), Rational(0)};
    if (worked.generator != want) {
        note("worked inverse generator mismatch");
        return false;
    }
    return true;
}

// criterion 4: root location relative to the real axis via exact minors
bool criterion_hermite() {
    std::mt19937 rng(44444);
    std::uniform_int_distribution<long> re(-4, 4);
    std::uniform_int_distribution<long> im2(1, 8);  // imaginary part in halves
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = deg(rng);
        std::vector<GaussianRational> roots;
        for (int k = 0; k < d; ++k)
            roots.emplace_back(Rational(re(rng)), Rational(im2(rng), 2));
        GP p{GaussianRational(Rational(1))};
        for (const auto& r : roots) p = p * GP{GaussianRational(Rational(0)) - r,
                                               GaussianRational(Rational(1))};
        if (hermite_upper_halfplane(p).verdict != HalfPlaneVerdict::ALL_UPPER) {
            note("upper-root product not classified ALL_UPPER at trial " +
                   std::to_string(trial));
            return false;
        }
        GP flipped{GaussianRational(Rational(1))};
        for (std::size_t k = 0; k < roots.size(); ++k) {
            const auto r = k == 0 ? roots[k].conj() : roots[k];
            flipped = flipped * GP{GaussianRational(Rational(0)) - r,
                                   GaussianRational(Rational(1))};
        }
        if (hermite_upper_halfplane(flipped).verdict == HalfPlaneVerdict::ALL_UPPER) {
            note("conjugate flip still classified ALL_UPPER at trial " +
                   std::to_string(trial));
            return false;
        }
    }
    const GP xi{GaussianRational(Rational(0), Rational(-1)), GaussianRational(Rational(1))};
    const auto res = hermite_upper_halfplane(xi);
    if (res.verdict != HalfPlaneVerdict::ALL_UPPER || res.minors != std::vector<Rational>{Rational(1)}) {
        note("x - i minor is not exactly 1");
        return false;
    }
    return true;
}

// criterion 5: pencil determinants define the parametrized curve
bool criterion_implicitize() {
    const auto parabola = implicitize(RationalTriple<Rational>::make(
        P{Rational(1)}, P{Rational(0), Rational(1)}, P{Rational(0), Rational(0), Rational(1)}));
    BivariatePolynomial<Rational> want(
        std::vector<std::vector<Rational>>{{Rational(0), Rational(1)}, {}, {Rational(-1)}});
    if (!(parabola == want)) {
        note("canonical parabola equation mismatch");
        return false;
    }

    std::mt19937 rng(55555);
    std::uniform_int_distribution<int> deg(1, 4);
    int done = 0;
    while (done < 50) {
        std::optional<RationalTriple<Rational>> drawn;
        std::optional<BivariatePolynomial<Rational>> curve;
        try {
            drawn = RationalTriple<Rational>::make(random_poly(rng, deg(rng)),
                                                   random_poly(rng, deg(rng)),
                                                   random_poly(rng, deg(rng)));
            curve = implicitize(*drawn);
        } catch (const PreconditionError&) {
            continue;  // degenerate draw; take the next one
        }
        ++done;
        const auto& t = *drawn;
        const auto& delta = *curve;
        if (delta.total_degree().value_or(0) > static_cast<int>(t.n)) {
            note("curve degree exceeds the matrix size");
            return false;
        }
        for (long k = 0; k <= 2 * static_cast<long>(t.n) + 2; ++k) {
            const Rational at(k, 7);
            const Rational p0 = t.p0.eval(at);
            if (is_zero(p0)) continue;
            const Rational x1 = t.p1.eval(at) / p0, x2 = t.p2.eval(at) / p0;
            if (!is_zero(delta.eval(x1, x2))) {
                note("curve equation does not vanish along the parametrization");
                return false;
            }
        }
    }
    return true;
}

// criterion 6: boundary equations of images of the unit disk
bool criterion_quadrature() {
    const GP z{GaussianRational(Rational(0)), GaussianRational(Rational(1))};
    const auto unit = quadrature_boundary(z);
    BivariatePolynomial<GaussianRational> want(std::vector<std::vector<GaussianRational>>{
        {GaussianRational(Rational(1)), GaussianRational(Rational(0))},
        {GaussianRational(Rational(0)), GaussianRational(Rational(-1))}});
    if (!(unit.delta == want) || unit.removed_z != 0 || unit.removed_zbar != 0) {
        note("identity map boundary is not 1 - z zbar");
        return false;
    }

    const GP q{GaussianRational(Rational(0)), GaussianRational(Rational(1)),
               GaussianRational(Rational(1, 3))};
    const auto boundary = quadrature_boundary(q);
    for (long k = 1; k <= 10; ++k) {
        const Rational t(k);
        const Rational denom = Rational(1) + t * t;
        const GaussianRational zc((Rational(1) - t * t) / denom, (Rational(2) * t) / denom);
        if (!(zc * zc.conj() == GaussianRational(Rational(1)))) {
            note("tangent half-angle point left the circle");
            return false;
        }
        const GaussianRational w = q.eval(zc);
        if (!is_zero(boundary.delta.eval(w, w.conj()))) {
            note("boundary equation does not vanish at a circle image");
            return false;
        }
    }
    return true;
}

// criterion 7: the dimension-one node and the vessel assembled from it
bool criterion_vessel() {
    CMatrix a(1, 1), one(1, 1);
    a(0, 0) = {0.0, 0.5};
    one(0, 0) = {1.0, 0.0};
    const OperatorNode node{a, one, one};
    if (!(node_residual(node) <= kNodeTol)) {
        note("unit node residual nonzero");
        return false;
    }

    CMatrix phi_prime(2, 1);
    phi_prime(0, 0) = {1.0, 0.0};
    phi_prime(1, 0) = {0.0, -0.5};
    const auto v = vessel_from_node(node, P{Rational(1)}, P{Rational(0), Rational(1)},
                                    P{Rational(0), Rational(0), Rational(1)}, 2, phi_prime);
    const auto r = vessel_residuals(v);
    const double worst =
        std::max({r.colligation1, r.colligation2, r.gamma_in, r.gamma_out, r.linkage});
    if (worst > kVesselTol) {
        note("vessel residual " + std::to_string(worst));
        return false;
    }
    if (r.commutativity > kVesselTol) {
        note("main operators fail to commute");
        return false;
    }
    return true;
}

// criterion 8: separation indices on the three study maps, oracle-checked
bool criterion_braid() {
    using BP = BivariatePolynomial<Rational>;
    const auto grid = [](std::vector<std::vector<long>> rows) {
        std::vector<std::vector<Rational>> g;
        for (auto& row : rows) {
            std::vector<Rational> r;
            for (long c : row) r.emplace_back(c);
            g.push_back(std::move(r));
        }
        return BP(std::move(g));
    };
    const PlaneRationalMap<Rational> tangent{grid({{1}}), grid({{0, 1}, {1}}),
                                             grid({{0, 1}, {0}, {1}})};
    const PlaneRationalMap<Rational> osculating{grid({{1}}), grid({{0, 1}, {1}}),
                                                grid({{0, 0, 2}, {0}, {1}})};
    const PlaneRationalMap<Rational> coincident{grid({{1}}), grid({{0, 1}, {1}}),
                                                grid({{0, 0, 1}, {0}, {1}})};

    const auto at_origin = [](const PlaneRationalMap<Rational>& m) {
        return multiplicity_index(m, Rational(0), Rational(0)).minimal_index;
    };
    if (at_origin(tangent) != 1 || at_origin(osculating) != 2 ||
        at_origin(coincident) != std::nullopt) {
        note("study-map indices are not (1, 2, diverges)");
        return false;
    }
    for (const auto* m : {&tangent, &osculating}) {
        const auto idx = multiplicity_index(*m, Rational(0), Rational(0)).minimal_index;
        if (idx != branch_contact_order(*m, Rational(0), Rational(0))) {
            note("series oracle disagrees with the separation index");
            return false;
        }
    }
    const auto d = monodromy_descriptor(tangent);
    if (d.points.size() != 2 || !d.points[0].is_real || !d.points[1].is_real ||
        d.points[0].minimal_index != 1 || d.points[1].minimal_index != 1) {
        note("tangent-map descriptor is not two real transversal points");
        return false;
    }
    return true;
}

// criterion 9: the command-line surface reproduces its golden transcripts
struct GoldenCase {
    const char* name;       // golden file stem
    const char* arguments;  // everything after the binary path
};

std::string run_cli(const std::string& arguments, int& exit_code) {
    const std::string cmd = std::string(BEZKIT_CLI_PATH) + " " + arguments + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string read_file(const std::string& path, bool& ok) {
    FILE* f = fopen(path.c_str(), "rb");
    if (!f) {
        ok = false;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    fclose(f);
    ok = true;
    return out;
}

bool criterion_cli() {
    const std::string dir = BEZKIT_GOLDEN_DIR;
    const std::vector<GoldenCase> cases = {
        {"bezout", "bezout --in {DIR}/pair.json"},
        {"common_zeros", "common-zeros --in {DIR}/pair_shared.json"},
        {"invert", "invert --in {DIR}/pair.json"},
        {"hermite", "hermite --in {DIR}/poly_xi.json"},
        {"implicitize", "implicitize --in {DIR}/triple_parabola.json"},
        {"quadrature", "quadrature --in {DIR}/quad_z.json"},
        {"vessel_build", "vessel-build --in {DIR}/vessel_build.json"},
        {"vessel_check", "vessel-check --in {DIR}/vessel_bundle.json"},
        {"braid", "braid --in {DIR}/map_tangent.json"},
        {"sample", "sample --in {DIR}/triple_parabola.json --samples 5"},
        {"identities", "identities --in {DIR}/pair.json"},
    };
    for (const auto& c : cases) {
        std::string args = c.arguments;
        std::string::size_type at;
        while ((at = args.find("{DIR}")) != std::string::npos) args.replace(at, 5, dir);
        bool ok = false;
        const std::string want = read_file(dir + "/" + c.name + ".out", ok);
        if (!ok) {
            note(std::string("missing golden transcript for ") + c.name);
            return false;
        }
        int code1 = -1, code2 = -1;
        const std::string first = run_cli(args, code1);
        const std::string second = run_cli(args, code2);
        if (code1 != 0 || code2 != 0) {
            note(std::string(c.name) + " exited nonzero");
            return false;
        }
        if (first != want) {
            note(std::string(c.name) + " output drifted from its transcript");
            return false;
        }
        if (first != second) {
            note(std::string(c.name) + " is not rerun-stable");
            return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;  // 0 = untimed
    std::function<bool()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "exact identity suite, 200 random pairs", kIdentitySeconds, criterion_identities},
        {2, "kernel dimension = gcd degree, 200 pairs", kKernelSeconds, criterion_kernel_gcd},
        {3, "Hankel inverses: 100 exact, 50 root-sum, worked pair", 0, criterion_hankel},
        {4, "upper half-plane verdicts, 100 products + flips", 0, criterion_hermite},
        {5, "implicit equations vanish on 50 parametrizations", kImplicitizeSeconds,
         criterion_implicitize},
        {6, "disk-image boundaries: identity map and z + z^2/3", 0, criterion_quadrature},
        {7, "node residual and assembled-vessel residuals", 0, criterion_vessel},
        {8, "separation indices (1, 2, diverges) + series oracle", kBraidSeconds,
         criterion_braid},
        {9, "CLI transcripts byte-identical across reruns", 0, criterion_cli},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        g_detail.clear();
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note(e.what());
        }
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            note("exceeded " + std::to_string(c.budget_seconds) + "s budget");
            ok = false;
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.label,
                    secs);
        if (!ok && !g_detail.empty()) std::printf("       %s\n", g_detail.c_str());
    }
    if (failures > 0) std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
