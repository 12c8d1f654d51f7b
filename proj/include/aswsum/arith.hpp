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

#ifndef ASWSUM_ARITH_HPP
#define ASWSUM_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace aswsum {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Exact integer power; throws CapExceeded on 64-bit overflow.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw CapExceeded("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

/// a^{-1} mod p for prime p.
inline std::uint64_t invmod_prime(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse");
    return powmod(a, p - 2, p);
}

/// a^{-1} mod n for a coprime to n.
inline std::uint64_t invmod_prime_power(std::uint64_t a, std::uint64_t n) {
    long long r0 = static_cast<long long>(n), r1 = static_cast<long long>(a % n), s0 = 0, s1 = 1;
    while (r1) {
        const long long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw std::domain_error("not invertible modulo " + std::to_string(n));
    return static_cast<std::uint64_t>(((s0 % static_cast<long long>(n)) + static_cast<long long>(n)) % static_cast<long long>(n));
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Reduce a signed value into [0, n).
inline std::uint64_t reduce_signed(long long v, std::uint64_t n) {
    long long r = v % static_cast<long long>(n);
    if (r < 0) r += static_cast<long long>(n);
    return static_cast<std::uint64_t>(r);
}

/*
   Coefficient ring abstraction used by Witt vectors, polynomials and series.
   A specialization provides

     static R zero_like(const R&);          additive identity of the same ring
     static R one_like(const R&);
     static R scale(const R&, long long);   integer multiple
     static bool same_ring(const R&, const R&);
     static constexpr bool characteristic_zero;
*/
template <class R>
struct coefficient_traits;

template <>
struct coefficient_traits<BigInt> {
    static BigInt zero_like(const BigInt&) { return 0; }
    static BigInt one_like(const BigInt&) { return 1; }
    static BigInt scale(const BigInt& a, long long n) { return a * n; }
    static bool same_ring(const BigInt&, const BigInt&) { return true; }
    static constexpr bool characteristic_zero = true;
};

template <class R>
R ring_power(const R& base, std::uint64_t e) {
    R result = coefficient_traits<R>::one_like(base);
    R b = base;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

}  // namespace aswsum

#endif  // ASWSUM_ARITH_HPP
