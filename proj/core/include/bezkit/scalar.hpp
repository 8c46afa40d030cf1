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

#ifndef BEZKIT_SCALAR_HPP
#define BEZKIT_SCALAR_HPP

#include <cmath>
#include <complex>
#include <type_traits>

#include "bezkit/gaussian.hpp"
#include "bezkit/rational.hpp"

namespace bezkit {

// Uniform scalar interface over the coefficient types the library is
// instantiated with: Rational, GaussianRational, double, complex<double>.

inline Rational conj_of(const Rational& x) { return x; }
inline GaussianRational conj_of(const GaussianRational& x) { return x.conj(); }
inline double conj_of(double x) { return x; }
inline std::complex<double> conj_of(const std::complex<double>& x) { return std::conj(x); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0); }

inline double magnitude(const Rational& x) { return std::fabs(x.to_double()); }
inline double magnitude(const GaussianRational& x) { return std::abs(x.to_complex()); }
inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }

inline std::complex<double> to_complex(const Rational& x) { return {x.to_double(), 0.0}; }
inline std::complex<double> to_complex(const GaussianRational& x) { return x.to_complex(); }
inline std::complex<double> to_complex(double x) { return {x, 0.0}; }
inline std::complex<double> to_complex(const std::complex<double>& x) { return x; }

template <typename T>
inline constexpr bool is_exact_scalar_v =
    std::is_same_v<T, Rational> || std::is_same_v<T, GaussianRational>;

}  // namespace bezkit

#endif  // BEZKIT_SCALAR_HPP
