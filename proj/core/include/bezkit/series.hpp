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

#ifndef BEZKIT_SERIES_HPP
#define BEZKIT_SERIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bezkit/polynomial.hpp"

namespace bezkit {

/// Truncated power series: exactly `order` coefficients c_0..c_{order-1},
/// all arithmetic mod s^order. Unlike Polynomial there is no pruning — the
/// truncation order is part of the value.
template <typename T>
class PowerSeries {
   public:
    PowerSeries(std::size_t order, T constant = T(0)) : c_(order, T(0)) {
        if (order == 0) throw PreconditionError("size-error", "series needs order >= 1");
        c_[0] = std::move(constant);
    }
    PowerSeries(std::size_t order, const Polynomial<T>& p) : c_(p.padded_coeffs(order)) {
        if (order == 0) throw PreconditionError("size-error", "series needs order >= 1");
    }

    std::size_t order() const { return c_.size(); }
    const T& coeff(std::size_t k) const { return c_[k]; }
    T& coeff(std::size_t k) { return c_[k]; }
    const std::vector<T>& coeffs() const { return c_; }

    /// Index of the lowest nonzero coefficient, if any.
    std::optional<std::size_t> valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!is_zero(c_[k])) return k;
        return std::nullopt;
    }

    PowerSeries operator-() const {
        PowerSeries out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        check_orders(a, b);
        PowerSeries out = a;
        for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] += b.c_[k];
        return out;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        check_orders(a, b);
        PowerSeries out(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j)
                out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }

    /// Division; the divisor must be a unit (nonzero constant term).
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
        check_orders(a, b);
        if (is_zero(b.c_[0]))
            throw PreconditionError("division-by-zero", "series divisor has zero constant term");
        PowerSeries out(a.order());
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            T acc = a.c_[k];
            for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * out.c_[k - j];
            out.c_[k] = acc / b.c_[0];
        }
        return out;
    }

    /// this ∘ g; g must have zero constant term for the composition to be
    /// well-defined on truncations.
    PowerSeries compose(const PowerSeries& g) const {
        check_orders(*this, g);
        if (!is_zero(g.c_[0]))
            throw PreconditionError("domain-error", "composition needs a zero constant term");
        PowerSeries out(order());
        // Horner in g: out = (((c_{n-1}) g + c_{n-2}) g + ...) + c_0
        for (std::size_t k = c_.size(); k-- > 0;) {
            out = out * g;
            out.c_[0] += c_[k];
        }
        return out;
    }

    /// Compositional inverse: the series s with s(this(u)) = u, requiring
    /// zero constant term and a unit linear term. Solved coefficient by
    /// coefficient from the defining identity.
    PowerSeries revert() const {
        if (!is_zero(c_[0]))
            throw PreconditionError("domain-error", "reversion needs a zero constant term");
        if (c_.size() < 2 || is_zero(c_[1]))
            throw PreconditionError("oracle-inapplicable",
                                    "reversion needs a nonzero linear term");
        const std::size_t n = order();
        PowerSeries inv(n);
        inv.c_[1] = T(1) / c_[1];
        // powers[j] = (inv-so-far)^j ∘ ... built incrementally each round:
        // impose [u^k] this(inv(u)) = 0 for k >= 2 and solve for inv.c_[k].
        for (std::size_t k = 2; k < n; ++k) {
            // evaluate this(inv) with inv.c_[k] = 0, then fix the u^k term
            PowerSeries trial = PowerSeries(n);
            for (std::size_t j = c_.size(); j-- > 1;) {
                trial = trial * inv;
                trial.c_[0] += c_[j];
            }
            trial = trial * inv;  // multiply the final time by inv (Horner tail for j = 0 term absent)
            // trial now equals this(inv) since c_[0] = 0
            inv.c_[k] = -trial.c_[k] / c_[1];
        }
        return inv;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

   private:
    static void check_orders(const PowerSeries& a, const PowerSeries& b) {
        if (a.order() != b.order())
            throw PreconditionError("size-error", "series truncation orders differ");
    }

    std::vector<T> c_;
};

}  // namespace bezkit

#endif  // BEZKIT_SERIES_HPP
