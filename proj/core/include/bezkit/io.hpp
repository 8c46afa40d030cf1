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

#ifndef BEZKIT_IO_HPP
#define BEZKIT_IO_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bezkit/bivariate.hpp"
#include "bezkit/braid.hpp"
#include "bezkit/errors.hpp"
#include "bezkit/gaussian.hpp"
#include "bezkit/hankel.hpp"
#include "bezkit/implicitize.hpp"
#include "bezkit/matrix.hpp"
#include "bezkit/polynomial.hpp"
#include "bezkit/rational.hpp"
#include "bezkit/vessel.hpp"

namespace bezkit {

using json = nlohmann::json;

/// Structurally valid JSON that does not match the expected shape. Kept
/// apart from PreconditionError so callers can map it to the same failure
/// class as a parse error.
class SchemaError : public Error {
  public:
    explicit SchemaError(const std::string& message) : Error("schema-error", message) {}
};

enum class Field { Q, Qi };

inline std::string field_tag(Field f) { return f == Field::Q ? "Q" : "Q[i]"; }

// ---------------------------------------------------------------------------
// scalars: ["num","den"] over Q, ["re_num","re_den","im_num","im_den"] over
// Q[i]; integers travel as decimal strings so arbitrary precision survives.

namespace detail_io {

inline std::string expect_string(const json& j, const char* what) {
    if (!j.is_string()) throw SchemaError(std::string(what) + " must be a decimal string");
    return j.get<std::string>();
}

inline Rational rational_from(const json& num, const json& den) {
    try {
        return Rational::from_strings(expect_string(num, "numerator"),
                                      expect_string(den, "denominator"));
    } catch (const PreconditionError& e) {
        throw SchemaError(e.what());
    }
}

}  // namespace detail_io

template <typename T>
T parse_scalar(const json& j);

template <>
inline Rational parse_scalar<Rational>(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError("a scalar over Q is a 2-element array [\"num\",\"den\"]");
    return detail_io::rational_from(j[0], j[1]);
}

template <>
inline GaussianRational parse_scalar<GaussianRational>(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw SchemaError(
            "a scalar over Q[i] is a 4-element array [\"re_num\",\"re_den\",\"im_num\",\"im_den\"]");
    return GaussianRational(detail_io::rational_from(j[0], j[1]),
                            detail_io::rational_from(j[2], j[3]));
}

inline json emit_scalar(const Rational& r) { return json::array({r.numerator(), r.denominator()}); }

inline json emit_scalar(const GaussianRational& z) {
    return json::array({z.real().numerator(), z.real().denominator(), z.imag().numerator(),
                        z.imag().denominator()});
}

// ---------------------------------------------------------------------------
// polynomials: {"field":"Q"|"Q[i]","coeffs":[scalar,...]} ascending in degree

inline Field parse_field_tag(const json& j) {
    if (!j.is_object() || !j.contains("field"))
        throw SchemaError("expected an object with a \"field\" tag");
    const auto tag = detail_io::expect_string(j["field"], "field tag");
    if (tag == "Q") return Field::Q;
    if (tag == "Q[i]") return Field::Qi;
    throw SchemaError("unknown field tag \"" + tag + "\" (expected \"Q\" or \"Q[i]\")");
}

template <typename T>
Polynomial<T> parse_polynomial(const json& j) {
    const Field f = parse_field_tag(j);
    const Field want = std::is_same_v<T, Rational> ? Field::Q : Field::Qi;
    if (f != want)
        throw SchemaError("polynomial field tag \"" + field_tag(f) + "\" does not match \"" +
                          field_tag(want) + "\"");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw SchemaError("polynomial needs a \"coeffs\" array");
    std::vector<T> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const auto& c : j["coeffs"]) coeffs.push_back(parse_scalar<T>(c));
    return Polynomial<T>(std::move(coeffs));
}

template <typename T>
json emit_polynomial(const Polynomial<T>& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(emit_scalar(c));
    return json{{"field", std::is_same_v<T, Rational> ? "Q" : "Q[i]"}, {"coeffs", coeffs}};
}

// ---------------------------------------------------------------------------
// exact matrices: bare arrays of scalar rows

template <typename T>
Matrix<T> parse_exact_matrix(const json& j) {
    if (!j.is_array() || j.empty()) throw SchemaError("a matrix is a nonempty array of rows");
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    Matrix<T> m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw SchemaError("matrix rows must be arrays of equal length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_scalar<T>(j[i][k]);
    }
    return m;
}

template <typename T>
json emit_exact_matrix(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(emit_scalar(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Hankel form: {"n":n,"generator":[scalar,...]}  (2n−1 generator entries)

template <typename T>
HankelMatrix<T> parse_hankel(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generator"))
        throw SchemaError("a Hankel matrix is {\"n\":n,\"generator\":[...]}");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
        throw SchemaError("\"n\" must be a positive integer");
    const auto n = j["n"].get<std::size_t>();
    if (!j["generator"].is_array() || j["generator"].size() != 2 * n - 1)
        throw SchemaError("\"generator\" must hold exactly 2n-1 scalars");
    std::vector<T> gen;
    gen.reserve(2 * n - 1);
    for (const auto& c : j["generator"]) gen.push_back(parse_scalar<T>(c));
    return HankelMatrix<T>{n, std::move(gen)};
}

template <typename T>
json emit_hankel(const HankelMatrix<T>& h) {
    json gen = json::array();
    for (const auto& c : h.generator) gen.push_back(emit_scalar(c));
    return json{{"n", h.n}, {"generator", gen}};
}

// ---------------------------------------------------------------------------
// bivariate polynomials: {"coeffs":[[scalar,...],...]}, row i ↔ x1^i,
// column j ↔ x2^j; the scalar arity tells Q from Q[i] apart.

template <typename T>
BivariatePolynomial<T> parse_bivariate(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw SchemaError("a bivariate polynomial is {\"coeffs\":[[scalar,...],...]}");
    std::vector<std::vector<T>> grid;
    grid.reserve(j["coeffs"].size());
    for (const auto& row : j["coeffs"]) {
        if (!row.is_array()) throw SchemaError("\"coeffs\" rows must be arrays");
        std::vector<T> r;
        r.reserve(row.size());
        for (const auto& c : row) r.push_back(parse_scalar<T>(c));
        grid.push_back(std::move(r));
    }
    return BivariatePolynomial<T>(std::move(grid));
}

template <typename T>
json emit_bivariate(const BivariatePolynomial<T>& f) {
    json rows = json::array();
    for (const auto& row : f.grid()) {
        json r = json::array();
        for (const auto& c : row) r.push_back(emit_scalar(c));
        rows.push_back(r);
    }
    return json{{"coeffs", rows}};
}

// ---------------------------------------------------------------------------
// parameter triples and plane maps: {"p0":…,"p1":…,"p2":…}

namespace detail_io {

inline const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing member \"") + key + "\"");
    return j[key];
}

}  // namespace detail_io

template <typename T>
RationalTriple<T> parse_triple(const json& j) {
    return RationalTriple<T>::make(parse_polynomial<T>(detail_io::member(j, "p0")),
                                   parse_polynomial<T>(detail_io::member(j, "p1")),
                                   parse_polynomial<T>(detail_io::member(j, "p2")));
}

template <typename T>
json emit_triple(const RationalTriple<T>& t) {
    return json{{"p0", emit_polynomial(t.p0)},
                {"p1", emit_polynomial(t.p1)},
                {"p2", emit_polynomial(t.p2)}};
}

template <typename T>
PlaneRationalMap<T> parse_plane_map(const json& j) {
    return {parse_bivariate<T>(detail_io::member(j, "p0")),
            parse_bivariate<T>(detail_io::member(j, "p1")),
            parse_bivariate<T>(detail_io::member(j, "p2"))};
}

// ---------------------------------------------------------------------------
// complex matrices: {"re":[[float,...],...],"im":[[float,...],...]}

inline CMatrix parse_complex_matrix(const json& j) {
    const json& re = detail_io::member(j, "re");
    const json& im = detail_io::member(j, "im");
    if (!re.is_array() || !im.is_array() || re.empty() || re.size() != im.size())
        throw SchemaError("\"re\" and \"im\" must be equal-shape arrays of rows");
    const std::size_t cols = re[0].is_array() ? re[0].size() : 0;
    CMatrix m(re.size(), cols);
    for (std::size_t i = 0; i < re.size(); ++i) {
        if (!re[i].is_array() || !im[i].is_array() || re[i].size() != cols ||
            im[i].size() != cols)
            throw SchemaError("\"re\" and \"im\" must be equal-shape arrays of rows");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!re[i][k].is_number() || !im[i][k].is_number())
                throw SchemaError("complex matrix entries must be numbers");
            m(i, k) = {re[i][k].get<double>(), im[i][k].get<double>()};
        }
    }
    return m;
}

inline json emit_complex_matrix(const CMatrix& m) {
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            rrow.push_back(m(i, k).real());
            irow.push_back(m(i, k).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    return json{{"re", re}, {"im", im}};
}

// ---------------------------------------------------------------------------
// operator nodes and vessels

inline OperatorNode parse_node(const json& j) {
    return {parse_complex_matrix(detail_io::member(j, "A")),
            parse_complex_matrix(detail_io::member(j, "Phi")),
            parse_complex_matrix(detail_io::member(j, "sigma"))};
}

inline json emit_node(const OperatorNode& c) {
    return json{{"A", emit_complex_matrix(c.A)},
                {"Phi", emit_complex_matrix(c.Phi)},
                {"sigma", emit_complex_matrix(c.sigma)}};
}

inline CommutativeVessel parse_vessel(const json& j) {
    return {parse_complex_matrix(detail_io::member(j, "A1")),
            parse_complex_matrix(detail_io::member(j, "A2")),
            parse_complex_matrix(detail_io::member(j, "Phi")),
            parse_complex_matrix(detail_io::member(j, "sigma1")),
            parse_complex_matrix(detail_io::member(j, "sigma2")),
            parse_complex_matrix(detail_io::member(j, "gamma_in")),
            parse_complex_matrix(detail_io::member(j, "gamma_out"))};
}

inline json emit_vessel(const CommutativeVessel& v) {
    return json{{"A1", emit_complex_matrix(v.A1)},
                {"A2", emit_complex_matrix(v.A2)},
                {"Phi", emit_complex_matrix(v.Phi)},
                {"sigma1", emit_complex_matrix(v.sigma1)},
                {"sigma2", emit_complex_matrix(v.sigma2)},
                {"gamma_in", emit_complex_matrix(v.gamma_in)},
                {"gamma_out", emit_complex_matrix(v.gamma_out)}};
}

inline json emit_residuals(const VesselResiduals& r) {
    return json{{"colligation1", r.colligation1}, {"colligation2", r.colligation2},
                {"gamma_in", r.gamma_in},         {"gamma_out", r.gamma_out},
                {"linkage", r.linkage},           {"commutativity", r.commutativity}};
}

// ---------------------------------------------------------------------------
// intersection descriptors

inline json emit_descriptor(const MonodromyDescriptor& d) {
    json points = json::array();
    for (const auto& p : d.points) {
        json entry{{"image", json::array({p.image_x1.real(), p.image_x1.imag(),
                                          p.image_x2.real(), p.image_x2.imag()})},
                   {"real", p.is_real}};
        auto put = [&entry](const char* key, const std::optional<int>& v) {
            if (v)
                entry[key] = *v;
            else
                entry[key] = "diverges";
        };
        put("min_index", p.minimal_index);
        put("paper_multiplicity", p.paper_multiplicity);
        put("full_twists", p.twist_count);
        points.push_back(entry);
    }
    return json{{"points", points}};
}

}  // namespace bezkit

#endif  // BEZKIT_IO_HPP
