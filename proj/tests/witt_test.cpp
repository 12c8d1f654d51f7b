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

#include <gtest/gtest.h>

#include <random>

#include "aswsum/finite_field.hpp"
#include "aswsum/witt.hpp"

using namespace aswsum;

namespace {

using WF = WittVector<Gf>;

WF vec(const FiniteField& k, WittParams wp, std::vector<std::uint64_t> idx) {
    std::vector<Gf> c;
    for (auto i : idx) c.push_back(k.element(i));
    return WF(wp, c);
}

WF random_vec(const FiniteField& k, WittParams wp, std::mt19937_64& rng) {
    std::vector<Gf> c;
    for (unsigned i = 0; i < wp.l; ++i) c.push_back(k.element(rng() % k.order()));
    return WF(wp, c);
}

}  // namespace

TEST(UniversalPolys, SumAndProductLengthTwoCharTwo) {
    const auto& u = UniversalWittPolys::get({2, 2});
    const auto names = u.variable_names();
    // independent check on expanded integer polynomials
    IntPoly x0 = IntPoly::variable(4, 0), x1 = IntPoly::variable(4, 1);
    IntPoly y0 = IntPoly::variable(4, 2), y1 = IntPoly::variable(4, 3);
    EXPECT_EQ(u.sum_integer(1), x1 + y1 - x0 * y0);
    EXPECT_EQ(u.sum(1).terms().size(), 3u);
    EXPECT_EQ(u.product_integer(1), x0.pow(2) * y1 + y0.pow(2) * x1 + (x1 * y1).scaled(2));
    EXPECT_EQ(u.product(1).terms().size(), 2u);
    EXPECT_EQ(u.sum_integer(0), x0 + y0);
    EXPECT_EQ(u.product_integer(0), x0 * y0);
}

TEST(UniversalPolys, LengthOneIsTheBaseRing) {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        const auto& u = UniversalWittPolys::get({p, 1});
        IntPoly x0 = IntPoly::variable(2, 0), y0 = IntPoly::variable(2, 1);
        EXPECT_EQ(u.sum_integer(0), x0 + y0);
        EXPECT_EQ(u.product_integer(0), x0 * y0);
    }
}

TEST(UniversalPolys, RejectsBadParams) {
    EXPECT_THROW(WittParams(4, 2), std::invalid_argument);
    EXPECT_THROW(WittParams(2, 0), std::invalid_argument);
    EXPECT_THROW(WittParams(2, 5), std::invalid_argument);
}

TEST(UniversalPolys, GhostCompatibleOverIntegers) {
    std::mt19937_64 rng(7);
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned l = 1; l <= 3; ++l) {
            WittParams wp(p, l);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<BigInt> a, b;
                for (unsigned i = 0; i < l; ++i) {
                    a.push_back(BigInt(static_cast<long long>(rng() % 21) - 10));
                    b.push_back(BigInt(static_cast<long long>(rng() % 21) - 10));
                }
                WittVector<BigInt> x(wp, a), y(wp, b);
                auto gx = ghost_components(x), gy = ghost_components(y);
                auto gs = ghost_components(x + y), gm = ghost_components(x * y), gn = ghost_components(-x);
                for (unsigned i = 0; i < l; ++i) {
                    EXPECT_EQ(gs[i], gx[i] + gy[i]);
                    EXPECT_EQ(gm[i], gx[i] * gy[i]);
                    EXPECT_EQ(gn[i], -gx[i]);
                }
            }
        }
    }
}

TEST(Ghost, SmallValues) {
    WittVector<BigInt> a({2, 2}, {2, 3});
    EXPECT_EQ(ghost_components(a), (std::vector<BigInt>{2, 10}));
    WittVector<BigInt> b({3, 2}, {1, 1});
    EXPECT_EQ(ghost_components(b), (std::vector<BigInt>{1, 4}));
    WittVector<BigInt> z({2, 2}, {0, 0});
    EXPECT_EQ(ghost_components(z), (std::vector<BigInt>{0, 0}));
    const auto& f2 = FiniteField::get(2, 1);
    EXPECT_THROW(ghost_components(vec(f2, {2, 2}, {1, 0})), std::domain_error);
}

TEST(WittArithmetic, SmallExamples) {
    const auto& f2 = FiniteField::get(2, 1);
    const auto& f3 = FiniteField::get(3, 1);
    WittParams w22(2, 2), w32(3, 2);
    EXPECT_EQ(vec(f2, w22, {1, 0}) + vec(f2, w22, {1, 0}), vec(f2, w22, {0, 1}));
    EXPECT_EQ(vec(f3, w32, {1, 0}) + vec(f3, w32, {1, 0}), vec(f3, w32, {2, 1}));
    EXPECT_EQ(vec(f2, w22, {1, 1}) * vec(f2, w22, {1, 1}), vec(f2, w22, {1, 0}));
    EXPECT_EQ(verschiebung(vec(f2, w22, {1, 1})), vec(f2, w22, {0, 1}));
    EXPECT_EQ(frobenius(vec(f2, w22, {1, 1})), vec(f2, w22, {1, 1}));
    EXPECT_EQ(verschiebung(frobenius(vec(f2, w22, {1, 0}))), vec(f2, w22, {0, 1}));
    EXPECT_THROW(verschiebung(vec(f2, w22, {1, 1}), 3), std::invalid_argument);
    EXPECT_THROW(vec(f2, w22, {1, 0}) + vec(f3, WittParams(2, 2), {1, 0}), std::invalid_argument);
    EXPECT_THROW(vec(f2, w22, {1, 0}) + vec(f2, WittParams(2, 3), {1, 0, 0}), std::invalid_argument);
}

TEST(WittArithmetic, MatchesIntegersModPowerOfP) {
    // W_l(F_p) = Z/p^l; digits of n are obtained by repeatedly subtracting Teichmuller lifts
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned l = 1; l <= 3; ++l) {
            WittParams wp(p, l);
            const auto& k = FiniteField::get(p, 1);
            const std::uint64_t n = wp.modulus();
            std::vector<WF> of(n, WF::zero(wp, k.zero()));
            for (std::uint64_t i = 1; i < n; ++i) of[i] = of[i - 1] + WF::one(wp, k.zero());
            for (std::uint64_t i = 0; i < n; ++i)
                for (std::uint64_t j = 0; j < n; ++j) {
                    ASSERT_EQ(of[i] * of[j], of[(i * j) % n]);
                    ASSERT_EQ(of[i] - of[j], of[(i + n - j) % n]);
                }
            EXPECT_EQ(of[n - 1] + WF::one(wp, k.zero()), WF::zero(wp, k.zero()));
        }
    }
}

TEST(WittArithmetic, RingAxiomsOverExtensionFields) {
    std::mt19937_64 rng(11);
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned m : {1u, 2u}) {
            const auto& k = FiniteField::get(p, m);
            for (unsigned l = 1; l <= 3; ++l) {
                WittParams wp(p, l);
                const WF zero = WF::zero(wp, k.zero()), one = WF::one(wp, k.zero());
                for (int t = 0; t < 40; ++t) {
                    WF x = random_vec(k, wp, rng), y = random_vec(k, wp, rng), z = random_vec(k, wp, rng);
                    ASSERT_EQ((x + y) + z, x + (y + z));
                    ASSERT_EQ((x * y) * z, x * (y * z));
                    ASSERT_EQ(x + y, y + x);
                    ASSERT_EQ(x * y, y * x);
                    ASSERT_EQ(x * (y + z), x * y + x * z);
                    ASSERT_EQ(x + (-x), zero);
                    ASSERT_EQ(x * one, x);
                    ASSERT_EQ(x * zero, zero);
                    ASSERT_EQ(x + zero, x);
                    const WF px = witt_scale(x, p);
                    ASSERT_EQ(frobenius(verschiebung(x)), px);
                    ASSERT_EQ(verschiebung(frobenius(x)), px);
                    for (unsigned a = 0; a < l; ++a)
                        for (unsigned b = 0; a + b < l; ++b)
                            ASSERT_EQ(verschiebung(x, a) * verschiebung(y, b),
                                      verschiebung(frobenius(x, b) * frobenius(y, a), a + b));
                }
            }
        }
    }
}

TEST(WittArithmetic, PrintsCoordinates) {
    const auto& f3 = FiniteField::get(3, 1);
    std::ostringstream os;
    os << vec(f3, {3, 2}, {2, 1});
    EXPECT_EQ(os.str(), "(2,1)");
}
