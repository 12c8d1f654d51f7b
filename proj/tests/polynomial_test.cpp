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

#include "aswsum/embedding.hpp"
#include "aswsum/polynomial.hpp"

using namespace aswsum;

namespace {

FieldPoly poly(const FiniteField& k, std::vector<long long> c) {
    std::vector<Gf> v;
    for (auto x : c) v.push_back(k.from_int(x));
    return FieldPoly(k, v);
}

FieldPoly random_poly(const FiniteField& k, int deg, std::mt19937_64& rng) {
    std::vector<Gf> v;
    for (int i = 0; i <= deg; ++i) v.push_back(k.element(rng() % k.order()));
    return FieldPoly(k, v);
}

}  // namespace

TEST(FieldPoly, DivisionIdentity) {
    std::mt19937_64 rng(3);
    const auto& k = FiniteField::get(3, 2);
    for (int t = 0; t < 200; ++t) {
        FieldPoly a = random_poly(k, static_cast<int>(rng() % 9), rng);
        FieldPoly b = random_poly(k, static_cast<int>(rng() % 5), rng);
        if (b.is_zero()) continue;
        auto [q, r] = FieldPoly::divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
        auto [g, s, u] = extended_gcd(a, b);
        EXPECT_EQ(s * a + u * b, g);
        if (!g.is_zero()) {
            EXPECT_TRUE((a % g).is_zero());
            EXPECT_TRUE((b % g).is_zero());
        }
    }
    EXPECT_THROW(FieldPoly::divmod(poly(k, {1}), FieldPoly(k)), std::domain_error);
}

TEST(FieldPoly, IrreducibleCountsMatchNecklaceFormula) {
    // number of monic irreducibles of degree n over F_q is (1/n) sum_{d|n} mu(d) q^{n/d}
    const auto& f2 = FiniteField::get(2, 1);
    const std::vector<std::size_t> expect2 = {2, 1, 2, 3, 6, 9};
    for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(monic_irreducibles(f2, n).size(), expect2[n - 1]) << n;
    const auto& f4 = FiniteField::get(2, 2);
    EXPECT_EQ(monic_irreducibles(f4, 2).size(), 6u);
    EXPECT_EQ(monic_irreducibles(FiniteField::get(3, 1), 3).size(), 8u);
}

TEST(FieldPoly, FactorizationReconstructs) {
    std::mt19937_64 rng(5);
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
        const auto& k = FiniteField::get(p, m);
        for (int t = 0; t < 40; ++t) {
            FieldPoly f = random_poly(k, 1 + static_cast<int>(rng() % 10), rng);
            if (f.degree() <= 0) continue;
            f = f * f.derivative() * f + poly(k, {0, 1}).pow(p);  // encourage repeated factors
            if (f.degree() <= 0) continue;
            auto fac = factor(f);
            FieldPoly prod = FieldPoly::constant(f.leading());
            for (auto& [g, e] : fac) {
                EXPECT_TRUE(is_irreducible(g));
                EXPECT_TRUE(g.leading().is_one());
                prod *= g.pow(e);
            }
            EXPECT_EQ(prod, f);
        }
    }
}

TEST(FieldPoly, RootsAgreeWithBruteForce) {
    std::mt19937_64 rng(9);
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
        const auto& k = FiniteField::get(p, m);
        for (int t = 0; t < 40; ++t) {
            FieldPoly f = random_poly(k, 1 + static_cast<int>(rng() % 6), rng);
            if (f.degree() <= 0) continue;
            std::vector<Gf> brute;
            for (std::uint64_t a = 0; a < k.order(); ++a)
                if (f.evaluate(k.element(a)).is_zero()) brute.push_back(k.element(a));
            EXPECT_EQ(roots(f), brute);
        }
    }
}

TEST(Embedding, PrimeFieldAndFrobeniusFixedImages) {
    const auto& f2 = FiniteField::get(2, 1), &f4 = FiniteField::get(2, 2);
    const auto& e = FieldEmbedding::get(f2, f4);
    EXPECT_EQ(e.map(f2.one()), f4.one());
    EXPECT_EQ(e.map(f2.zero()), f4.zero());
    for (auto [p, m, d] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 3}, {3, 2, 2}, {2, 3, 2}, {5, 1, 2}}) {
        const auto& base = FiniteField::get(p, m);
        const auto& ext = FiniteField::get(p, m * d);
        const auto& emb = FieldEmbedding::get(base, ext);
        std::set<std::uint64_t> images;
        for (std::uint64_t a = 0; a < base.order(); ++a) {
            Gf x = base.element(a), y = emb.map(x);
            EXPECT_EQ(y.frobenius(m), y);
            EXPECT_EQ(emb.pull(y), x);
            images.insert(y.index());
            for (std::uint64_t b = 0; b < base.order(); b += 3) {
                Gf z = base.element(b);
                EXPECT_EQ(emb.map(x * z), y * emb.map(z));
                EXPECT_EQ(emb.map(x + z), y + emb.map(z));
            }
        }
        EXPECT_EQ(images.size(), base.order());
        // elements outside the subfield have no preimage
        std::size_t outside = 0;
        for (std::uint64_t a = 0; a < ext.order(); ++a)
            if (!emb.preimage(ext.element(a))) ++outside;
        EXPECT_EQ(outside, ext.order() - base.order());
    }
}

TEST(Embedding, MinimalPolynomialIsIrreducibleAndVanishes) {
    const auto& f2 = FiniteField::get(2, 1), &f16 = FiniteField::get(2, 4);
    const auto& emb = FieldEmbedding::get(f2, f16);
    for (std::uint64_t a = 0; a < 16; ++a) {
        Gf y = f16.element(a);
        FieldPoly mp = emb.minimal_polynomial(y);
        EXPECT_TRUE(is_irreducible(mp));
        EXPECT_TRUE(emb.map(mp).evaluate(y).is_zero());
    }
}
