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
#include <set>

#include "aswsum/cyclotomic.hpp"
#include "aswsum/galois_ring.hpp"

using namespace aswsum;

namespace {

GrElement random_element(const GaloisRing& r, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c;
    for (unsigned i = 0; i < r.degree(); ++i) c.push_back(rng() % r.modulus_integer());
    return r.from_coeffs(c);
}

std::vector<GrElement> all_elements(const GaloisRing& r) {
    std::vector<GrElement> out;
    const std::uint64_t n = r.modulus_integer();
    for (std::uint64_t idx = 0; idx < r.order(); ++idx) {
        std::vector<std::uint64_t> c;
        std::uint64_t t = idx;
        for (unsigned i = 0; i < r.degree(); ++i, t /= n) c.push_back(t % n);
        out.push_back(r.from_coeffs(c));
    }
    return out;
}

}  // namespace

TEST(GaloisRing, TeichmullerLifts) {
    const auto& z9 = GaloisRing::get(3, 2, 1);
    const auto& f3 = z9.residue_field();
    EXPECT_EQ(z9.teichmuller(f3.from_int(2)), z9.from_int(8));
    EXPECT_EQ(z9.teichmuller(f3.zero()), z9.zero());
    EXPECT_EQ(z9.teichmuller(f3.one()), z9.one());
    const auto& z4 = GaloisRing::get(2, 2, 1);
    auto t = z4.teichmuller_set();
    EXPECT_EQ(t, (std::vector<GrElement>{z4.zero(), z4.one()}));
}

TEST(GaloisRing, TeichmullerSetStructure) {
    for (auto [p, l, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 2}, {2, 3, 3}, {3, 2, 2}, {5, 2, 1}, {3, 3, 2}}) {
        const auto& r = GaloisRing::get(p, l, m);
        const auto& k = r.residue_field();
        auto t = r.teichmuller_set();
        std::set<std::vector<std::uint64_t>> distinct;
        for (auto& x : t) {
            distinct.insert(x.coeffs());
            EXPECT_EQ(x.pow(k.order()), x);
        }
        EXPECT_EQ(distinct.size(), k.order());
        for (std::uint64_t a = 0; a < k.order(); ++a)
            for (std::uint64_t b = 0; b < k.order(); ++b)
                EXPECT_EQ(t[a] * t[b], r.teichmuller(k.element(a) * k.element(b)));
        // T* is cyclic: the lift of a primitive element has order q - 1
        GrElement g = r.teichmuller(k.primitive_element()), cur = g;
        std::uint64_t order = 1;
        while (!(cur == r.one())) {
            cur *= g;
            ++order;
        }
        EXPECT_EQ(order, k.order() - 1);
    }
}

TEST(GaloisRing, WittDigits) {
    const auto& z9 = GaloisRing::get(3, 2, 1);
    const auto& f3 = z9.residue_field();
    auto w = z9.to_witt(z9.from_int(2));
    EXPECT_EQ(w, WittVector<Gf>({3, 2}, {f3.from_int(2), f3.from_int(1)}));
    const auto& r = GaloisRing::get(2, 3, 2);
    for (std::uint64_t a = 0; a < 4; ++a) {
        Gf x = r.residue_field().element(a);
        EXPECT_EQ(r.to_witt(r.teichmuller(x)), WittVector<Gf>::teichmuller(r.witt_params(), x));
    }
    for (const auto& x : all_elements(r)) EXPECT_EQ(r.from_witt(r.to_witt(x)), x);
}

TEST(GaloisRing, WittMapIsRingIsomorphism) {
    for (auto [p, l, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 1}, {3, 2, 1}, {2, 2, 2}}) {
        const auto& r = GaloisRing::get(p, l, m);
        auto els = all_elements(r);
        std::vector<WittVector<Gf>> ws;
        for (auto& x : els) ws.push_back(r.to_witt(x));
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t j = 0; j < els.size(); ++j) {
                ASSERT_EQ(r.to_witt(els[i] + els[j]), ws[i] + ws[j]);
                ASSERT_EQ(r.to_witt(els[i] * els[j]), ws[i] * ws[j]);
            }
    }
    std::mt19937_64 rng(17);
    for (auto [p, l, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 3, 2}, {3, 2, 2}, {2, 3, 3}}) {
        const auto& r = GaloisRing::get(p, l, m);
        for (int t = 0; t < 300; ++t) {
            GrElement x = random_element(r, rng), y = random_element(r, rng);
            ASSERT_EQ(r.to_witt(x + y), r.to_witt(x) + r.to_witt(y));
            ASSERT_EQ(r.to_witt(x * y), r.to_witt(x) * r.to_witt(y));
        }
    }
}

TEST(GaloisRing, Traces) {
    const auto& r = GaloisRing::get(2, 2, 2);
    EXPECT_EQ(r.absolute_trace(r.generator()), 3u);
    EXPECT_EQ(r.absolute_trace(r.one()), 2u);
    EXPECT_EQ(r.absolute_trace(r.zero()), 0u);
    std::mt19937_64 rng(19);
    for (auto [p, l, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 2}, {2, 3, 3}, {3, 2, 2}, {3, 3, 3}, {5, 2, 2}}) {
        const auto& g = GaloisRing::get(p, l, m);
        std::set<std::uint64_t> image;
        for (int t = 0; t < 200; ++t) {
            GrElement x = random_element(g, rng), y = random_element(g, rng);
            const std::uint64_t tx = g.absolute_trace(x);
            ASSERT_EQ(tx, g.absolute_trace_matrix(x));
            ASSERT_EQ(g.absolute_trace(x + y), (tx + g.absolute_trace(y)) % g.modulus_integer());
            ASSERT_EQ(g.absolute_trace(g.frobenius(x)), tx);
            image.insert(tx);
        }
        EXPECT_EQ(image.size(), g.modulus_integer());
    }
}

TEST(GaloisRing, ExtensionTraceAndEmbedding) {
    const auto& z4 = GaloisRing::get(2, 2, 1);
    const auto& r2 = GaloisRing::get(2, 2, 2);
    GaloisRingExtension e(z4, r2);
    EXPECT_EQ(e.map(z4.from_int(3)), r2.from_int(3));
    EXPECT_EQ(e.trace(r2.generator()), z4.from_int(3));
    EXPECT_EQ(e.trace(r2.one()), z4.from_int(2));
    const auto& b = GaloisRing::get(3, 2, 2);
    const auto& x = GaloisRing::get(3, 2, 4);
    GaloisRingExtension e2(b, x);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        GrElement u = random_element(b, rng), v = random_element(b, rng);
        EXPECT_EQ(e2.map(u * v), e2.map(u) * e2.map(v));
        EXPECT_EQ(e2.map(u + v), e2.map(u) + e2.map(v));
        EXPECT_EQ(e2.pull(e2.map(u)), u);
        EXPECT_EQ(e2.trace(e2.map(u)), u + u);
        GrElement y = random_element(x, rng);
        // transitivity: absolute trace of y equals absolute trace of its relative trace
        EXPECT_EQ(x.absolute_trace(y), b.absolute_trace(e2.trace(y)));
    }
}

TEST(Cyclotomic, Arithmetic) {
    CyclotomicInteger z = CyclotomicInteger::zeta_power(2, 2, 1);
    CyclotomicInteger one = CyclotomicInteger::from_int(2, 2, 1);
    EXPECT_TRUE((one + z + z * z + z * z * z).is_zero());
    EXPECT_NEAR(static_cast<double>((one + z).abs()), std::sqrt(2.0), 1e-12);
    EXPECT_EQ((z * z).coeffs(), (std::vector<BigInt>{-1, 0}));
    EXPECT_THROW(z + CyclotomicInteger::from_int(3, 1, 1), std::invalid_argument);
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned l = 1; l <= 3; ++l) {
            CyclotomicInteger s(p, l);
            const std::uint64_t n = checked_pow(p, l);
            for (std::uint64_t k = 0; k < n; ++k) {
                s += CyclotomicInteger::zeta_power(p, l, static_cast<long long>(k));
                EXPECT_EQ(CyclotomicInteger::zeta_power(p, l, 1) * CyclotomicInteger::zeta_power(p, l, static_cast<long long>(k)),
                          CyclotomicInteger::zeta_power(p, l, static_cast<long long>(k + 1)));
            }
            EXPECT_TRUE(s.is_zero());
        }
    }
    EXPECT_EQ(z.to_string(), "z");
    EXPECT_EQ((one - z).to_string(), "1-z");
}

TEST(Cyclotomic, RationalsNormalize) {
    CyclotomicInteger z = CyclotomicInteger::zeta_power(3, 1, 1);
    CyclotomicRational a(BigInt(2) * z, 4);
    EXPECT_EQ(a.denominator(), 2);
    CyclotomicRational b = a + a;
    EXPECT_TRUE(b.is_integral());
    EXPECT_EQ(b.numerator(), z);
}

TEST(AdditiveCharacter, Values) {
    const auto& z4 = GaloisRing::get(2, 2, 1);
    EXPECT_EQ(additive_character(z4.one(), z4.one()), CyclotomicInteger::zeta_power(2, 2, 1));
    EXPECT_EQ(additive_character(z4.one(), z4.zero()), CyclotomicInteger::from_int(2, 2, 1));
    const auto& r = GaloisRing::get(2, 2, 2);
    EXPECT_EQ(additive_character(r.one(), r.generator()), CyclotomicInteger::zeta_power(2, 2, 3));
    for (auto [p, l, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 2}, {3, 2, 1}, {2, 3, 1}}) {
        const auto& g = GaloisRing::get(p, l, m);
        auto els = all_elements(g);
        CyclotomicInteger total(p, l);
        GrElement b = g.one();
        for (auto& x : els) {
            total += additive_character(b, x);
            for (std::size_t j = 0; j < els.size(); j += 5)
                EXPECT_EQ(additive_character(b, x + els[j]), additive_character(b, x) * additive_character(b, els[j]));
        }
        EXPECT_TRUE(total.is_zero());
    }
}
