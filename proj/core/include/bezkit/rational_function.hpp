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

#ifndef BEZKIT_RATIONAL_FUNCTION_HPP
#define BEZKIT_RATIONAL_FUNCTION_HPP

#include <ostream>
#include <utility>

#include "bezkit/polynomial.hpp"

namespace bezkit {

/// Quotient of polynomials over a field, kept canonical: gcd(num, den) = 1
/// and den monic. Zero is 0/1.
template <typename T>
class RationalFunction {
   public:
    RationalFunction() : num_{}, den_{T(1)} {}
    RationalFunction(Polynomial<T> num) : num_(std::move(num)), den_{T(1)} {}
    RationalFunction(Polynomial<T> num, Polynomial<T> den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw PreconditionError("division-by-zero", "rational function with zero denominator");
        reduce();
    }

    const Polynomial<T>& num() const { return num_; }
    const Polynomial<T>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Evaluation; a pole at the point is the caller's mistake.
    T eval(const T& x) const {
        T d = den_.eval(x);
        if (bezkit::is_zero(d))
            throw PreconditionError("domain-error", "evaluation at a pole");
        return num_.eval(x) / d;
    }

    bool defined_at(const T& x) const { return !bezkit::is_zero(den_.eval(x)); }

    /// Quotient-rule derivative, reduced.
    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, already_reduced{}); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero())
            throw PreconditionError("division-by-zero", "division by the zero function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
        os << "(" << f.num_ << ")";
        if (f.den_.degree() != 0 || f.den_.coeff(0) != T(1)) os << "/(" << f.den_ << ")";
        return os;
    }

   private:
    struct already_reduced {};
    RationalFunction(Polynomial<T> num, Polynomial<T> den, already_reduced)
        : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial<T>{T(1)};
            return;
        }
        const auto g = gcd(num_, den_);
        if (g.degree() != 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const T lead = den_.leading();
        if (lead != T(1)) {
            std::vector<T> nc = num_.coeffs(), dc = den_.coeffs();
            for (auto& c : nc) c = c / lead;
            for (auto& c : dc) c = c / lead;
            num_ = Polynomial<T>(std::move(nc));
            den_ = Polynomial<T>(std::move(dc));
        }
    }

    Polynomial<T> num_, den_;
};

}  // namespace bezkit

#endif  // BEZKIT_RATIONAL_FUNCTION_HPP
