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

// Independent reference computations shared by the unit suites and the acceptance binary.

#ifndef ASWSUM_TESTS_ORACLES_HPP
#define ASWSUM_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>

namespace oracle {

// F_2[u] as bitmasks.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (; b; b >>= 1, a <<= 1)
        if (b & 1) r ^= a;
    return r;
}

inline int deg2(std::uint64_t a) { return a ? 63 - std::countl_zero(a) : -1; }

// W_2 over F_2[u] with hand-derived formulas: (a0,a1)+(b0,b1) = (a0+b0, a1+b1+a0 b0), -(b0,b1) = (b0, b1+b0^2).
struct W2 {
    std::uint64_t a0, a1;
};
inline W2 add(W2 a, W2 b) { return {a.a0 ^ b.a0, a.a1 ^ b.a1 ^ clmul(a.a0, b.a0)}; }
inline W2 neg(W2 b) { return {b.a0, b.a1 ^ clmul(b.a0, b.a0)}; }
inline W2 wp(W2 g) { return add({clmul(g.a0, g.a0), clmul(g.a1, g.a1)}, neg(g)); }

// max(2 deg h0, deg h1) over positive degrees, 0 if pole-free; u = 1/x at the place (x).
inline int pole_measure(W2 h) {
    int r = 0;
    if (deg2(h.a0) > 0) r = 2 * deg2(h.a0);
    if (deg2(h.a1) > 0) r = std::max(r, deg2(h.a1));
    return r;
}

// Minimum of pole_measure(f - wp(g)) over g with components in u F_2[u] of degree <= maxdeg.
inline int brute_min_measure(W2 f, int maxdeg) {
    int best = pole_measure(f);
    const std::uint64_t n = 1ull << maxdeg;
    for (std::uint64_t g0 = 0; g0 < n; ++g0)
        for (std::uint64_t g1 = 0; g1 < n; ++g1) {
            const int m = pole_measure(add(f, neg(wp({g0 << 1, g1 << 1}))));
            if (m < best) best = m;
        }
    return best;
}

}  // namespace oracle

#endif  // ASWSUM_TESTS_ORACLES_HPP
