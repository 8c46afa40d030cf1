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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bezkit/bezout.hpp"
#include "bezkit/braid.hpp"
#include "bezkit/hankel.hpp"
#include "bezkit/implicitize.hpp"
#include "bezkit/io.hpp"
#include "bezkit/vessel.hpp"

namespace {

using namespace bezkit;

struct Options {
    std::string subcommand;
    std::string in_path;
    std::string out_path;
    std::string inline_json;
    std::string field;  // "", "Q", "Qi"
    double tol = 1e-9;
    int depth = 8;
    int samples = -1;  // command-specific defaults
    std::vector<double> interval;
};

std::string slurp(const Options& opt) {
    if (!opt.in_path.empty()) {
        std::ifstream in(opt.in_path);
        if (!in) throw SchemaError("cannot open input file " + opt.in_path);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    if (!opt.inline_json.empty()) return opt.inline_json;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw SchemaError("cannot open output file " + opt.out_path);
    out << text;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

Field input_field(const json& j, const Options& opt) {
    // the JSON tag is authoritative; --field, when present, must agree
    const Field f = parse_field_tag(j);
    if (!opt.field.empty()) {
        const Field want = opt.field == "Q" ? Field::Q : Field::Qi;
        if (f != want)
            throw SchemaError("input is tagged \"" + field_tag(f) + "\" but --field asked for \"" +
                              field_tag(want) + "\"");
    }
    return f;
}

json pair_member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("expected {\"p\":…,\"q\":…}; missing \"") + key + "\"");
    return j[key];
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// -- subcommands -------------------------------------------------------------

int cmd_bezout(const Options& opt) {
    const json j = json::parse(slurp(opt));
    if (input_field(pair_member(j, "p"), opt) == Field::Q) {
        const auto b = bezout_matrix(parse_polynomial<Rational>(j["p"]),
                                     parse_polynomial<Rational>(j["q"]));
        write_output(opt, dump(emit_exact_matrix(b.entries)));
    } else {
        const auto b = bezout_matrix(parse_polynomial<GaussianRational>(j["p"]),
                                     parse_polynomial<GaussianRational>(j["q"]));
        write_output(opt, dump(emit_exact_matrix(b.entries)));
    }
    return 0;
}

int cmd_common_zeros(const Options& opt) {
    const json j = json::parse(slurp(opt));
    std::size_t count = 0;
    if (input_field(pair_member(j, "p"), opt) == Field::Q)
        count = common_zero_count(parse_polynomial<Rational>(j["p"]),
                                  parse_polynomial<Rational>(j["q"]));
    else
        count = common_zero_count(parse_polynomial<GaussianRational>(j["p"]),
                                  parse_polynomial<GaussianRational>(j["q"]));
    write_output(opt, dump(json{{"count", count}}));
    return 0;
}

int cmd_invert(const Options& opt) {
    const json j = json::parse(slurp(opt));
    if (input_field(pair_member(j, "p"), opt) == Field::Q)
        write_output(opt, dump(emit_hankel(bezout_inverse(parse_polynomial<Rational>(j["p"]),
                                                          parse_polynomial<Rational>(j["q"])))));
    else
        write_output(opt,
                     dump(emit_hankel(bezout_inverse(parse_polynomial<GaussianRational>(j["p"]),
                                                     parse_polynomial<GaussianRational>(j["q"])))));
    return 0;
}

int cmd_hermite(const Options& opt) {
    const json j = json::parse(slurp(opt));
    Polynomial<GaussianRational> p;
    if (input_field(j, opt) == Field::Qi) {
        p = parse_polynomial<GaussianRational>(j);
    } else {
        // rational input embeds into Q[i] coefficient-wise
        std::vector<GaussianRational> cs;
        for (const auto& c : parse_polynomial<Rational>(j).coeffs()) cs.emplace_back(c);
        p = Polynomial<GaussianRational>(std::move(cs));
    }
    const auto result = hermite_upper_halfplane(p);
    write_output(opt, dump(json{{"verdict", to_string(result.verdict)}}));
    return 0;
}

int cmd_implicitize(const Options& opt) {
    const json j = json::parse(slurp(opt));
    if (input_field(detail_io::member(j, "p0"), opt) == Field::Q)
        write_output(opt, dump(emit_bivariate(implicitize(parse_triple<Rational>(j)))));
    else
        write_output(opt, dump(emit_bivariate(implicitize(parse_triple<GaussianRational>(j)))));
    return 0;
}

int cmd_quadrature(const Options& opt) {
    const json j = json::parse(slurp(opt));
    Polynomial<GaussianRational> q;
    if (input_field(j, opt) == Field::Qi) {
        q = parse_polynomial<GaussianRational>(j);
    } else {
        std::vector<GaussianRational> cs;
        for (const auto& c : parse_polynomial<Rational>(j).coeffs()) cs.emplace_back(c);
        q = Polynomial<GaussianRational>(std::move(cs));
    }
    const auto boundary = quadrature_boundary(q);
    json out = emit_bivariate(boundary.delta);
    out["removed_z"] = boundary.removed_z;
    out["removed_zbar"] = boundary.removed_zbar;
    write_output(opt, dump(out));

    // θ-grid image of the unit circle under q, for plotting; only written
    // alongside a file output since stdout carries the JSON
    if (!opt.out_path.empty()) {
        const int count = opt.samples > 0 ? opt.samples : 512;
        std::ofstream csv(opt.out_path + ".csv");
        if (!csv) throw SchemaError("cannot open output file " + opt.out_path + ".csv");
        csv << "theta,re,im\n";
        const auto qc = embed_complex(q);
        for (int k = 0; k < count; ++k) {
            const double theta = 2.0 * 3.14159265358979323846 * k / count;
            const auto w = qc.eval(std::complex<double>(std::cos(theta), std::sin(theta)));
            csv << format_double(theta) << "," << format_double(w.real()) << ","
                << format_double(w.imag()) << "\n";
        }
    }
    return 0;
}

int cmd_vessel_check(const Options& opt) {
    const json j = json::parse(slurp(opt));
    const auto residuals = vessel_residuals(parse_vessel(j));
    write_output(opt, dump(emit_residuals(residuals)));
    return 0;
}

int cmd_vessel_build(const Options& opt) {
    const json j = json::parse(slurp(opt));
    const auto node = parse_node(detail_io::member(j, "node"));
    const auto phi_prime = parse_complex_matrix(detail_io::member(j, "Phi_prime"));
    const json& tj = detail_io::member(j, "triple");
    CommutativeVessel v;
    if (input_field(detail_io::member(tj, "p0"), opt) == Field::Q) {
        const auto t = parse_triple<Rational>(tj);
        v = vessel_from_node(node, t.p0, t.p1, t.p2, t.n, phi_prime);
    } else {
        const auto t = parse_triple<GaussianRational>(tj);
        v = vessel_from_node(node, t.p0, t.p1, t.p2, t.n, phi_prime);
    }
    write_output(opt, dump(emit_vessel(v)));
    return 0;
}

int cmd_braid(const Options& opt) {
    const json j = json::parse(slurp(opt));
    const auto m = parse_plane_map<Rational>(j);
    const auto d = monodromy_descriptor(m, static_cast<std::size_t>(opt.depth), opt.tol);
    write_output(opt, dump(emit_descriptor(d)));
    return 0;
}

int cmd_sample(const Options& opt) {
    const json j = json::parse(slurp(opt));
    if (input_field(detail_io::member(j, "p0"), opt) != Field::Q)
        throw SchemaError("sample plots real curves; the triple must be over Q");
    const auto t = parse_triple<Rational>(j);
    const double a = opt.interval.size() == 2 ? opt.interval[0] : 0.0;
    const double b = opt.interval.size() == 2 ? opt.interval[1] : 1.0;
    const int count = opt.samples > 0 ? opt.samples : 512;

    const auto p0 = embed_complex(t.p0), p1 = embed_complex(t.p1), p2 = embed_complex(t.p2);
    std::ostringstream rows;
    rows << "t,x1,x2\n";
    for (int k = 0; k < count; ++k) {
        const double tk = count == 1 ? a : a + (b - a) * k / (count - 1);
        const auto d = p0.eval(std::complex<double>(tk));
        if (std::abs(d) < 1e-14) continue;  // parameter hits a pole; skip the row
        const auto x1 = p1.eval(std::complex<double>(tk)) / d;
        const auto x2 = p2.eval(std::complex<double>(tk)) / d;
        rows << format_double(tk) << "," << format_double(x1.real()) << ","
             << format_double(x2.real()) << "\n";
    }
    write_output(opt, rows.str());
    return 0;
}

int cmd_identities(const Options& opt) {
    const json j = json::parse(slurp(opt));
    const int count = opt.samples > 0 ? opt.samples : 8;
    IdentityReport report;
    if (input_field(pair_member(j, "p"), opt) == Field::Q) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (int k = 0; k < count; ++k)
            pts.emplace_back(Rational(k + 1, 2), Rational(-(k + 2), 3));
        report = identity_suite(parse_polynomial<Rational>(j["p"]),
                                parse_polynomial<Rational>(j["q"]), pts);
    } else {
        std::vector<std::pair<GaussianRational, GaussianRational>> pts;
        for (int k = 0; k < count; ++k)
            pts.emplace_back(GaussianRational(Rational(k + 1, 2), Rational(1)),
                             GaussianRational(Rational(-(k + 2), 3), Rational(-1, 2)));
        report = identity_suite(parse_polynomial<GaussianRational>(j["p"]),
                                parse_polynomial<GaussianRational>(j["q"]), pts);
    }
    std::ostringstream table;
    auto row = [&table](const char* name, bool ok) {
        table << name;
        for (std::size_t pad = std::string(name).size(); pad < 20; ++pad) table << ' ';
        table << (ok ? "pass" : "fail") << "\n";
    };
    table << "identity            result\n";
    row("quotient-form", report.quotient_form_ok);
    row("decomposition", report.decomposition_ok);
    row("diagonal", report.diagonal_ok);
    row("arbitrary-vector", report.arbitrary_vector_ok);
    write_output(opt, table.str());
    return report.all_ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact Bezout-matrix toolkit"};
    app.require_subcommand(1);

    const char* env_tol = std::getenv("BEZKIT_TOL");
    if (env_tol) opt.tol = std::atof(env_tol);

    int (*handler)(const Options&) = nullptr;
    struct Command {
        const char* name;
        const char* help;
        int (*fn)(const Options&);
    };
    const Command commands[] = {
        {"bezout", "Bezout matrix of a polynomial pair", cmd_bezout},
        {"common-zeros", "count shared zeros via the Bezout kernel", cmd_common_zeros},
        {"invert", "Hankel inverse of a Bezout matrix", cmd_invert},
        {"hermite", "upper half-plane root test", cmd_hermite},
        {"implicitize", "implicit curve equation of a rational parametrization", cmd_implicitize},
        {"quadrature", "boundary curve of the image of the unit disk", cmd_quadrature},
        {"vessel-check", "residuals of the vessel compatibility conditions", cmd_vessel_check},
        {"vessel-build", "assemble a vessel from a node and a curve triple", cmd_vessel_build},
        {"braid", "local braid descriptor of a plane-curve map", cmd_braid},
        {"sample", "sample points on a rational parametrization", cmd_sample},
        {"identities", "self-check of the defining matrix identities", cmd_identities},
    };
    for (const auto& [name, help, fn] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--in", opt.in_path, "input JSON file (default: stdin)");
        sub->add_option("--out", opt.out_path, "output file (default: stdout)");
        sub->add_option("--field", opt.field, "expected scalar field")
            ->check(CLI::IsMember({"Q", "Qi"}));
        sub->add_option("--tol", opt.tol, "numeric tolerance");
        sub->add_option("--depth", opt.depth, "branch separation depth cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--samples", opt.samples, "sample/evaluation count")
            ->check(CLI::PositiveNumber);
        sub->add_option("--interval", opt.interval, "parameter interval A B")->expected(2);
        sub->add_option("input", opt.inline_json, "inline JSON input");
        sub->callback([&handler, fn, name = std::string(name), &opt]() {
            opt.subcommand = name;
            handler = fn;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return handler(opt);
    } catch (const json::parse_error& e) {
        std::cerr << "bezkit: " << e.what() << "\n";  // message carries line and column
        return 2;
    } catch (const bezkit::SchemaError& e) {
        std::cerr << "bezkit: " << e.what() << "\n";  // what() is prefixed with the error name
        return 2;
    } catch (const bezkit::PreconditionError& e) {
        std::cerr << "bezkit: " << e.what() << "\n";
        return 3;
    } catch (const bezkit::InvariantViolation& e) {
        std::cerr << "bezkit: " << e.what() << "\n";
        return 4;
    }
}
