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

#ifndef BEZKIT_POLYNOMIAL_HPP
#define BEZKIT_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "bezkit/scalar.hpp"

namespace bezkit {

namespace detail {

// Defers the is_zero lookup to a scope where Polynomial's member of the
// same name cannot shadow the free scalar overloads.
template <typename T>
bool entry_is_zero(const T& v) {
    return is_zero(v);
}

}  // namespace detail

/// Univariate polynomial with dense ascending coefficients, kept canonical:
/// no trailing zero coefficients, so size() == degree + 1 (empty == zero).
template <typename T>
class Polynomial {
   public:
    Polynomial() = default;
    /// Constant polynomial; implicit so Polynomial<T> itself models the
    /// scalar interface and can serve as the coefficient ring of another
    /// Polynomial.
    Polynomial(T scalar) : c_{std::move(scalar)} { prune(); }
    Polynomial(std::initializer_list<T> cs) : c_(cs) { prune(); }
    explicit Polynomial(std::vector<T> cs) : c_(std::move(cs)) { prune(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
    /// x^k with unit coefficient.
    static Polynomial monomial(std::size_t k, T coeff = T(1)) {
        std::vector<T> cs(k + 1, T(0));
        cs[k] = std::move(coeff);
        return Polynomial(std::move(cs));
    }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    /// Degree of zero polynomial is undefined; callers branch on nullopt.
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    /// Coefficient of x^k, zero beyond the stored range.
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    /// Coefficients padded with zeros to exactly n entries.
    std::vector<T> padded_coeffs(std::size_t n) const {
        std::vector<T> out(n, T(0));
        for (std::size_t k = 0; k < c_.size() && k < n; ++k) out[k] = c_[k];
        return out;
    }

    template <typename X>
    X eval(const X& x) const {
        X acc = X(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + X(c_[k]);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> out(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(out));
    }

    /// k-th formal derivative.
    Polynomial derivative(unsigned k) const {
        Polynomial d = *this;
        for (unsigned j = 0; j < k; ++j) d = d.derivative();
        return d;
    }

    /// this(g(x)) by Horner over polynomial arguments.
    Polynomial compose(const Polynomial& g) const {
        Polynomial acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * g + constant(c_[k]);
        return acc;
    }

    /// Coefficient-wise complex conjugate; for real scalars this is identity.
    Polynomial conj_coeffs() const {
        std::vector<T> out(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) out[k] = conj_of(c_[k]);
        return Polynomial(std::move(out));
    }

    /// x^n * p(1/x) for n = deg p: coefficient vector reversed.
    Polynomial reversed() const {
        std::vector<T> out(c_.rbegin(), c_.rend());
        return Polynomial(std::move(out));
    }

    Polynomial operator-() const {
        std::vector<T> out(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] = a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this + (-o); }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> out(p.c_.size());
        for (std::size_t k = 0; k < p.c_.size(); ++k) out[k] = s * p.c_[k];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Polynomial& p, const T& s) { return s * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.c_.empty()) return os << "0";
        bool first = true;
        for (std::size_t k = 0; k < p.c_.size(); ++k) {
            if (detail::entry_is_zero(p.c_[k])) continue;
            if (!first) os << " + ";
            os << "(" << p.c_[k] << ")";
            if (k > 0) os << "*x^" << k;
            first = false;
        }
        if (first) os << "0";
        return os;
    }

   private:
    void prune() {
        while (!c_.empty() && detail::entry_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <typename T>
bool is_zero(const Polynomial<T>& p) {
    return p.is_zero();
}

/// Polynomials over a field form an exact (if not invertible) scalar type;
/// this lets fraction-free matrix algorithms run over polynomial entries.
template <typename U>
inline constexpr bool is_exact_scalar_v<Polynomial<U>> = is_exact_scalar_v<U>;

/// Exact quotient; division that leaves a remainder is a logic error here,
/// not bad input (Bareiss-style algorithms guarantee divisibility).
template <typename T>
Polynomial<T> operator/(const Polynomial<T>& a, const Polynomial<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvariantViolation("inexact-division", "polynomial quotient left a remainder");
    return q;
}

/// Euclidean division over a field: returns {quotient, remainder}.
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (b.is_zero()) throw PreconditionError("division-by-zero", "polynomial division by zero");
    std::vector<T> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    if (rem.size() < bc.size()) return {{}, a};
    std::vector<T> quo(rem.size() - db, T(0));
    for (std::size_t k = rem.size(); k-- > db;) {
        T f = rem[k] / bc[db];
        if (!is_zero(f)) {
            quo[k - db] = f;
            for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
        }
    }
    return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) is undefined.
template <typename T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
    if (a.is_zero() && b.is_zero())
        throw PreconditionError("undefined-gcd", "gcd of two zero polynomials");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    T lead = a.leading();
    std::vector<T> cs = a.coeffs();
    for (auto& c : cs) c = c / lead;
    return Polynomial<T>(std::move(cs));
}

/// Unique polynomial of degree < #points through (xs[i], ys[i]), by Newton
/// divided differences. Abscissae must be pairwise distinct.
template <typename T>
Polynomial<T> interpolate(const std::vector<T>& xs, const std::vector<T>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw PreconditionError("shape-error", "interpolation needs equal nonempty point lists");
    const std::size_t n = xs.size();
    std::vector<T> dd = ys;  // dd[i] becomes the divided difference [y_0..y_i]
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n; i-- > level;) {
            T dx = xs[i] - xs[i - level];
            if (is_zero(dx))
                throw PreconditionError("domain-error", "repeated interpolation abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    Polynomial<T> acc = Polynomial<T>::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        acc = acc * Polynomial<T>{-xs[i], T(1)} + Polynomial<T>::constant(dd[i]);
    return acc;
}

template <typename T>
Polynomial<std::complex<double>> embed_complex(const Polynomial<T>& p) {
    std::vector<std::complex<double>> cs(p.coeffs().size());
    for (std::size_t k = 0; k < cs.size(); ++k) cs[k] = to_complex(p.coeffs()[k]);
    return Polynomial<std::complex<double>>(std::move(cs));
}

}  // namespace bezkit

#endif  // BEZKIT_POLYNOMIAL_HPP
