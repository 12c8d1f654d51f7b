/*
   Copyright 2026 The aswsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ASWSUM_ERRORS_HPP
#define ASWSUM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aswsum {

/* Error taxonomy. The CLI maps these onto exit codes:
     std::invalid_argument / ParseError -> 2, CapExceeded -> 3,
     PreconditionViolated (and subclasses) -> 4, everything else -> 1. */

class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or precision budget would be exceeded.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (degenerate vector, pole at an evaluation point, ...).
class PreconditionViolated : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class Degenerate : public PreconditionViolated {
   public:
    using PreconditionViolated::PreconditionViolated;
};

/// A place kind or expansion the library does not handle.
class Unsupported : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Broken internal invariant; always a bug.
class InternalError : public std::logic_error {
   public:
    explicit InternalError(const std::string& what) : std::logic_error("internal error: " + what) {}
};

/// Point enumeration cap: p^{m d} <= 10^7.
inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

/// Absolute slack applied to every |S| <= bound comparison.
inline constexpr double kBoundSlack = 1e-9;

}  // namespace aswsum

#endif  // ASWSUM_ERRORS_HPP
