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

#ifndef BEZKIT_RATIONAL_HPP
#define BEZKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "bezkit/errors.hpp"

namespace bezkit {

/// Exact rational number. Thin value wrapper around GMP's mpq_class that
/// keeps every instance in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1 after every operation.
class Rational {
   public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n), 1) {}
    Rational(int n) : v_(static_cast<signed long>(n), 1) {}

    Rational(long num, long den) {
        if (den == 0) throw PreconditionError("division-by-zero", "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "num", "-num" or "num/den" with arbitrary-precision decimal
    /// parts. The base is pinned to 10 so "0x…" and leading-zero octal forms
    /// are rejected rather than silently reinterpreted.
    explicit Rational(const std::string& text) {
        try {
            v_ = mpq_class(text, 10);
        } catch (const std::invalid_argument&) {
            throw PreconditionError("parse-error", "not a rational literal: '" + text + "'");
        }
        if (v_.get_den() == 0)
            throw PreconditionError("division-by-zero", "rational with zero denominator: '" + text + "'");
        v_.canonicalize();
    }

    static Rational from_strings(const std::string& num, const std::string& den) {
        return Rational(num + "/" + den);
    }

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }
    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw PreconditionError("division-by-zero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

   private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// gcd of two rationals: the positive generator of the fractional ideal
/// (a, b); content computations build on this.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return abs(b);
    if (b.is_zero()) return abs(a);
    mpz_class num_gcd, den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational::from_strings(num_gcd.get_str(), den_lcm.get_str());
}

}  // namespace bezkit

#endif  // BEZKIT_RATIONAL_HPP
