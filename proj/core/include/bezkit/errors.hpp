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

#ifndef BEZKIT_ERRORS_HPP
#define BEZKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezkit {

/// Base of every bezkit exception. `name()` is a stable short identifier
/// (e.g. "singular-matrix") suitable for machine consumption; `what()`
/// carries the human-readable message prefixed by the name.
class Error : public std::runtime_error {
   public:
    Error(std::string_view name, const std::string& message)
        : std::runtime_error(std::string(name) + ": " + message), name_(name) {}

    const std::string& name() const noexcept { return name_; }

   private:
    std::string name_;
};

/// A mathematical precondition was violated by the caller (bad input,
/// singular matrix where a regular one is required, mismatched degrees...).
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// An internal arithmetic invariant failed. This always indicates a bug in
/// bezkit itself, never a user error.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

}  // namespace bezkit

#endif  // BEZKIT_ERRORS_HPP
