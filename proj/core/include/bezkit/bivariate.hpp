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

#ifndef BEZKIT_BIVARIATE_HPP
#define BEZKIT_BIVARIATE_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "bezkit/polynomial.hpp"

namespace bezkit {

/// Bivariate polynomial with a dense rectangular coefficient grid:
/// coeff (i, j) multiplies x^i y^j (x is the first variable throughout).
/// Canonical form trims all-zero trailing rows and columns; zero == empty.
template <typename T>
class BivariatePolynomial {
   public:
    BivariatePolynomial() = default;
    explicit BivariatePolynomial(std::vector<std::vector<T>> grid) : g_(std::move(grid)) {
        std::size_t width = 0;
        for (const auto& row : g_) width = std::max(width, row.size());
        for (auto& row : g_) row.resize(width, T(0));
        prune();
    }

    static BivariatePolynomial constant(T v) {
        return BivariatePolynomial(std::vector<std::vector<T>>{{std::move(v)}});
    }
    /// x^i y^j with unit coefficient.
    static BivariatePolynomial monomial(std::size_t i, std::size_t j, T coeff = T(1)) {
        std::vector<std::vector<T>> grid(i + 1, std::vector<T>(j + 1, T(0)));
        grid[i][j] = std::move(coeff);
        return BivariatePolynomial(std::move(grid));
    }

    bool is_zero() const { return g_.empty(); }

    /// Degrees in x, y and total degree; all undefined for the zero polynomial.
    std::optional<int> degree_x() const {
        if (g_.empty()) return std::nullopt;
        return static_cast<int>(g_.size()) - 1;
    }
    std::optional<int> degree_y() const {
        if (g_.empty()) return std::nullopt;
        return static_cast<int>(g_[0].size()) - 1;
    }
    std::optional<int> total_degree() const {
        if (g_.empty()) return std::nullopt;
        int best = 0;
        for (std::size_t i = 0; i < g_.size(); ++i)
            for (std::size_t j = 0; j < g_[i].size(); ++j)
                if (!bezkit::is_zero(g_[i][j])) best = std::max(best, static_cast<int>(i + j));
        return best;
    }

    T coeff(std::size_t i, std::size_t j) const {
        if (i >= g_.size() || j >= g_[i].size()) return T(0);
        return g_[i][j];
    }
    const std::vector<std::vector<T>>& grid() const { return g_; }

    /// Nested Horner: collapse y first, then x.
    template <typename X>
    X eval(const X& x, const X& y) const {
        X acc = X(0);
        for (std::size_t i = g_.size(); i-- > 0;) {
            X row = X(0);
            for (std::size_t j = g_[i].size(); j-- > 0;) row = row * y + X(g_[i][j]);
            acc = acc * x + row;
        }
        return acc;
    }

    /// Term-by-term double sum; deliberately naive, kept as the oracle the
    /// Horner path is tested against.
    template <typename X>
    X eval_naive(const X& x, const X& y) const {
        X acc = X(0);
        for (std::size_t i = 0; i < g_.size(); ++i)
            for (std::size_t j = 0; j < g_[i].size(); ++j) {
                if (bezkit::is_zero(g_[i][j])) continue;
                X term = X(g_[i][j]);
                for (std::size_t a = 0; a < i; ++a) term = term * x;
                for (std::size_t b = 0; b < j; ++b) term = term * y;
                acc = acc + term;
            }
        return acc;
    }

    /// Restrictions to the coordinate axes, as univariate polynomials.
    Polynomial<T> restrict_y0() const {
        std::vector<T> out(g_.size());
        for (std::size_t i = 0; i < g_.size(); ++i) out[i] = g_[i].empty() ? T(0) : g_[i][0];
        return Polynomial<T>(std::move(out));
    }
    Polynomial<T> restrict_x0() const {
        if (g_.empty()) return {};
        return Polynomial<T>(g_[0]);
    }

    BivariatePolynomial derivative_x() const {
        if (g_.size() <= 1) return {};
        std::vector<std::vector<T>> grid(g_.begin() + 1, g_.end());
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (auto& c : grid[i]) c = c * T(static_cast<long>(i + 1));
        return BivariatePolynomial(std::move(grid));
    }
    BivariatePolynomial derivative_y() const {
        if (g_.empty() || g_[0].size() <= 1) return {};
        std::vector<std::vector<T>> grid(g_.size());
        for (std::size_t i = 0; i < g_.size(); ++i) {
            grid[i].assign(g_[i].begin() + 1, g_[i].end());
            for (std::size_t j = 0; j < grid[i].size(); ++j)
                grid[i][j] = grid[i][j] * T(static_cast<long>(j + 1));
        }
        return BivariatePolynomial(std::move(grid));
    }

    BivariatePolynomial swap_variables() const {
        if (g_.empty()) return {};
        std::vector<std::vector<T>> grid(g_[0].size(), std::vector<T>(g_.size(), T(0)));
        for (std::size_t i = 0; i < g_.size(); ++i)
            for (std::size_t j = 0; j < g_[i].size(); ++j) grid[j][i] = g_[i][j];
        return BivariatePolynomial(std::move(grid));
    }

    /// Substitutes bivariate arguments for both variables.
    BivariatePolynomial substitute(const BivariatePolynomial& fx,
                                   const BivariatePolynomial& fy) const {
        BivariatePolynomial acc;
        for (std::size_t i = g_.size(); i-- > 0;) {
            BivariatePolynomial row;
            for (std::size_t j = g_[i].size(); j-- > 0;)
                row = row * fy + constant(g_[i][j]);
            acc = acc * fx + row;
        }
        return acc;
    }

    BivariatePolynomial operator-() const {
        auto grid = g_;
        for (auto& row : grid)
            for (auto& c : row) c = -c;
        return BivariatePolynomial(std::move(grid));
    }

    friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        std::vector<std::vector<T>> grid(std::max(a.g_.size(), b.g_.size()));
        std::size_t width = 0;
        if (!a.g_.empty()) width = std::max(width, a.g_[0].size());
        if (!b.g_.empty()) width = std::max(width, b.g_[0].size());
        for (auto& row : grid) row.assign(width, T(0));
        for (std::size_t i = 0; i < a.g_.size(); ++i)
            for (std::size_t j = 0; j < a.g_[i].size(); ++j) grid[i][j] += a.g_[i][j];
        for (std::size_t i = 0; i < b.g_.size(); ++i)
            for (std::size_t j = 0; j < b.g_[i].size(); ++j) grid[i][j] += b.g_[i][j];
        return BivariatePolynomial(std::move(grid));
    }
    friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a + (-b);
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        if (a.g_.empty() || b.g_.empty()) return {};
        std::vector<std::vector<T>> grid(a.g_.size() + b.g_.size() - 1,
                                         std::vector<T>(a.g_[0].size() + b.g_[0].size() - 1, T(0)));
        for (std::size_t i = 0; i < a.g_.size(); ++i)
            for (std::size_t j = 0; j < a.g_[i].size(); ++j) {
                if (bezkit::is_zero(a.g_[i][j])) continue;
                for (std::size_t p = 0; p < b.g_.size(); ++p)
                    for (std::size_t q = 0; q < b.g_[p].size(); ++q)
                        grid[i + p][j + q] += a.g_[i][j] * b.g_[p][q];
            }
        return BivariatePolynomial(std::move(grid));
    }
    friend BivariatePolynomial operator*(const T& s, const BivariatePolynomial& a) {
        auto grid = a.g_;
        for (auto& row : grid)
            for (auto& c : row) c = s * c;
        return BivariatePolynomial(std::move(grid));
    }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.g_ == b.g_;
    }
    friend bool operator!=(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p) {
        if (p.g_.empty()) return os << "0";
        bool first = true;
        for (std::size_t i = 0; i < p.g_.size(); ++i)
            for (std::size_t j = 0; j < p.g_[i].size(); ++j) {
                if (bezkit::is_zero(p.g_[i][j])) continue;
                if (!first) os << " + ";
                os << "(" << p.g_[i][j] << ")";
                if (i) os << "*x^" << i;
                if (j) os << "*y^" << j;
                first = false;
            }
        if (first) os << "0";
        return os;
    }

   private:
    void prune() {
        auto row_zero = [](const std::vector<T>& row) {
            for (const auto& c : row)
                if (!bezkit::is_zero(c)) return false;
            return true;
        };
        while (!g_.empty() && row_zero(g_.back())) g_.pop_back();
        if (g_.empty()) return;
        std::size_t width = 0;
        for (const auto& row : g_)
            for (std::size_t j = row.size(); j-- > width;)
                if (!bezkit::is_zero(row[j])) {
                    width = j + 1;
                    break;
                }
        if (width == 0) {
            g_.clear();
            return;
        }
        for (auto& row : g_) row.resize(width, T(0));
    }

    std::vector<std::vector<T>> g_;
};

}  // namespace bezkit

#endif  // BEZKIT_BIVARIATE_HPP
