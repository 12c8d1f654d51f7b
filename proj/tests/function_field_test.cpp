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

#include "aswsum/elliptic.hpp"
#include "aswsum/projective_line.hpp"

using namespace aswsum;

namespace {

FieldPoly random_poly(const FiniteField& k, int deg, std::mt19937_64& rng) {
    std::vector<Gf> c;
    for (int i = 0; i <= deg; ++i) c.push_back(k.element(rng() % k.order()));
    return FieldPoly(k, c);
}

RationalFunction random_rational(const FiniteField& k, std::mt19937_64& rng) {
    FieldPoly d;
    do d = random_poly(k, static_cast<int>(rng() % 4), rng);
    while (d.is_zero());
    return RationalFunction(random_poly(k, static_cast<int>(rng() % 5), rng), d);
}

// f(c + t) by binomial expansion
LaurentSeries shifted_taylor(const FieldPoly& f, const Gf& c) {
    const FiniteField& k = f.field();
    std::vector<Gf> out(static_cast<std::size_t>(std::max(f.degree() + 1, 1)), k.zero());
    for (int n = 0; n <= f.degree(); ++n) {
        // (c + t)^n
        std::vector<Gf> b(static_cast<std::size_t>(n) + 1, k.zero());
        b[0] = k.one();
        for (int r = 0; r < n; ++r)
            {
                for (int j = r + 1; j >= 1; --j) b[j] = c * b[j] + b[j - 1];
                b[0] = c * b[0];
            }
        for (int j = 0; j <= n; ++j) out[j] = out[j] + f.coeff(n) * b[j];
    }
    return LaurentSeries(k, 0, out, LaurentSeries::kExact);
}

}  // namespace

TEST(ProjectiveLine, Valuations) {
    const auto& F3 = FiniteField::get(3, 1);
    ProjectiveLine L(F3);
    const auto x = L.x();
    const auto f = (x * x + L.constant(F3.one())) / x;
    EXPECT_EQ(L.valuation(f, L.point(F3.zero())), -1);
    EXPECT_EQ(L.valuation(x.pow(3), L.infinity()), -3);
    EXPECT_EQ(L.valuation(RationalFunction(F3), L.infinity()), kInfiniteValuation);
    const auto pi = FieldPoly(F3, {F3.one(), F3.zero(), F3.one()});  // x^2+1
    EXPECT_EQ(L.valuation(RationalFunction(pi.pow(2)) / x, L.finite(pi)), 2);
    EXPECT_EQ(L.valuation(f, L.finite(pi)), 1);
    EXPECT_THROW(L.finite(FieldPoly(F3, {F3.one(), F3.zero(), F3.from_int(2)})), std::invalid_argument);
}

TEST(ProjectiveLine, LaurentExample) {
    const auto& F2 = FiniteField::get(2, 1);
    ProjectiveLine L(F2);
    const auto x = L.x();
    const auto f = (x * x + x).inverse();
    const auto s = L.laurent(f, L.point(F2.zero()), 6);
    EXPECT_EQ(s.valuation(), -1);
    // 1/(x(1+x)) = x^-1 + 1 + x + x^2 + ...
    for (long e = -1; e < 5; ++e) EXPECT_TRUE(s.coeff(e).is_one()) << e;
    EXPECT_GE(s.precision(), 5);
}

TEST(ProjectiveLine, LaurentAgainstTaylorShift) {
    std::mt19937_64 rng(7);
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
        const auto& k = FiniteField::get(p, m);
        ProjectiveLine L(k);
        for (int it = 0; it < 25; ++it) {
            const auto f = random_rational(k, rng);
            if (f.is_zero()) continue;
            const Gf c = k.element(rng() % k.order());
            const auto P = L.point(c);
            const auto s = L.laurent(f, P, 10);
            const auto lhs = s * shifted_taylor(f.denominator(), c);
            const auto rhs = shifted_taylor(f.numerator(), c);
            for (long e = lhs.valuation(); e < std::min(lhs.precision(), lhs.valuation() + 20); ++e) EXPECT_EQ(lhs.coeff(e), rhs.coeff(e));
            EXPECT_EQ(s.valuation(), L.valuation(f, P));
            // more precision agrees on the common range
            const auto s2 = L.laurent(f, P, 25);
            for (long e = s.valuation(); e < std::min(s.precision(), s.valuation() + 20); ++e) EXPECT_EQ(s.coeff(e), s2.coeff(e));
        }
    }
}

TEST(ProjectiveLine, LaurentAtInfinityAndHigherDegree) {
    const auto& F2 = FiniteField::get(2, 1);
    ProjectiveLine L(F2);
    const auto x = L.x();
    const auto s = L.laurent(x.pow(3) + x, L.infinity(), 5);
    EXPECT_EQ(s.valuation(), -3);
    EXPECT_TRUE(s.coeff(-3).is_one());
    EXPECT_TRUE(s.coeff(-2).is_zero());
    EXPECT_TRUE(s.coeff(-1).is_one());
    // at pi = x^2+x+1 the expansion of pi itself is the uniformizer t
    const auto pi = FieldPoly(F2, {F2.one(), F2.one(), F2.one()});
    const auto P = L.finite(pi);
    EXPECT_EQ(P.degree, 2u);
    const auto X = L.expansion_of_x(P, 12);
    const auto tpi = LaurentSeries::compose(&P.residue_field() == &F2 ? pi : FieldEmbedding::get(F2, P.residue_field()).map(pi), X);
    EXPECT_EQ(tpi.valuation(), 1);
    EXPECT_TRUE(tpi.coeff(1).is_one());
    for (long e = 2; e < 12; ++e) EXPECT_TRUE(tpi.coeff(e).is_zero());
    const auto g = (x + L.constant(F2.one())) / RationalFunction(pi);
    const auto gs = L.laurent(g, P, 6);
    EXPECT_EQ(gs.valuation(), -1);
    EXPECT_EQ(gs.coeff(-1), P.root + P.residue_field().one());
}

TEST(ProjectiveLine, PlacesAndDivisors) {
    const auto& F2 = FiniteField::get(2, 1);
    ProjectiveLine L(F2);
    const auto places = L.places_up_to_degree(2);
    EXPECT_EQ(places.size(), 4u);
    const auto x = L.x();
    const auto f = RationalFunction(FieldPoly::constant(F2.one())) / (x * x * (x + L.constant(F2.one())));
    const auto D = L.pole_divisor(f);
    ASSERT_EQ(D.size(), 2u);
    long deg = 0;
    for (auto& [P, n] : D) deg += n * static_cast<long>(P.degree);
    EXPECT_EQ(deg, 3);
    // places of degree d over F_q: count by the necklace formula
    const auto& F3 = FiniteField::get(3, 1);
    ProjectiveLine L3(F3);
    const auto pl = L3.places_up_to_degree(3);
    std::size_t by_deg[4] = {0, 0, 0, 0};
    for (auto& P : pl) ++by_deg[P.degree];
    EXPECT_EQ(by_deg[1], 4u);
    EXPECT_EQ(by_deg[2], 3u);
    EXPECT_EQ(by_deg[3], 8u);
}

TEST(ProjectiveLine, DegreeOfPrincipalDivisorIsZero) {
    std::mt19937_64 rng(11);
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const auto& k = FiniteField::get(p, m);
        ProjectiveLine L(k);
        for (int it = 0; it < 30; ++it) {
            const auto f = random_rational(k, rng);
            if (f.is_zero()) continue;
            long poles = 0, zeros = 0;
            for (auto& [P, n] : L.pole_divisor(f)) poles += n * static_cast<long>(P.degree);
            for (auto& [P, n] : L.zero_divisor(f)) zeros += n * static_cast<long>(P.degree);
            EXPECT_EQ(poles, zeros);
            for (auto& [P, n] : L.pole_divisor(f)) EXPECT_EQ(L.valuation(f, P), -n);
        }
    }
}

TEST(ProjectiveLine, LiftResidue) {
    const auto& F2 = FiniteField::get(2, 1);
    ProjectiveLine L(F2);
    const auto pi = FieldPoly(F2, {F2.one(), F2.one(), F2.zero(), F2.one()});
    const auto P = L.finite(pi);
    const auto& R = P.residue_field();
    for (std::uint64_t i = 0; i < R.order(); ++i) {
        const auto c = R.element(i);
        const auto lift = L.lift_residue(P, c);
        EXPECT_LT(lift.degree(), 3);
        EXPECT_EQ(FieldEmbedding::get(F2, R).map(lift).evaluate(P.root), c);
    }
}

TEST(Elliptic, RejectsSingular) {
    const auto& F3 = FiniteField::get(3, 1);
    const Gf z = F3.zero();
    EXPECT_THROW(EllipticCurve(F3, {z, z, z, z, z}), std::invalid_argument);
}

TEST(Elliptic, SupersingularCurveOverF2) {
    const auto& F2 = FiniteField::get(2, 1);
    const Gf z = F2.zero(), o = F2.one();
    EllipticCurve E(F2, {z, z, o, z, z});
    EXPECT_EQ(E.point_count(1), 3u);
    EXPECT_EQ(E.valuation(E.x(), E.origin()), -2);
    EXPECT_EQ(E.valuation(E.y(), E.origin()), -3);
    EXPECT_EQ(E.valuation(E.x() * E.y() + E.x(), E.origin()), -5);
    // a = q + 1 - #E = 0, so #E(F_4) = 4 + 1 + 4 = 9
    EXPECT_EQ(E.point_count(2), 9u);
}

TEST(Elliptic, PointsAgainstBruteForce) {
    std::mt19937_64 rng(3);
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 1u}, {3u, 2u}}) {
        const auto& k = FiniteField::get(p, m);
        int made = 0;
        while (made < 3) {
            std::array<Gf, 5> a;
            for (auto& c : a) c = k.element(rng() % k.order());
            try {
                EllipticCurve E(k, a);
                ++made;
                std::uint64_t brute = 1;
                for (std::uint64_t x = 0; x < k.order(); ++x)
                    for (std::uint64_t y = 0; y < k.order(); ++y) brute += E.on_curve(k.element(x), k.element(y));
                EXPECT_EQ(E.point_count(1), brute);
                const long q = static_cast<long>(k.order());
                const long a1 = q + 1 - static_cast<long>(brute);
                EXPECT_LE(a1 * a1, 4 * q);
                // s_d = a s_{d-1} - q s_{d-2} with s_0 = 2, s_1 = a
                long s0 = 2, s1 = a1, qd = q;
                for (unsigned d = 2; d <= 3 && checked_pow(k.order(), d) <= 20000; ++d) {
                    const long s2 = a1 * s1 - q * s0;
                    qd *= q;
                    EXPECT_EQ(static_cast<long>(E.point_count(d)), qd + 1 - s2);
                    s0 = s1;
                    s1 = s2;
                }
            } catch (const std::invalid_argument&) {
            }
        }
    }
}

TEST(Elliptic, PlacesCountedByDegree) {
    const auto& F3 = FiniteField::get(3, 1);
    const Gf z = F3.zero(), o = F3.one();
    EllipticCurve E(F3, {z, z, z, -o, o});
    const auto places = E.places_up_to_degree(3);
    std::uint64_t n[4] = {0, 0, 0, 0};
    for (auto& P : places) n[P.degree] += 1;
    EXPECT_EQ(n[1], E.point_count(1));
    EXPECT_EQ(n[1] + 2 * n[2], E.point_count(2));
    EXPECT_EQ(n[1] + 3 * n[3], E.point_count(3));
    for (auto& P : places) {
        if (P.kind != Place::Kind::Affine) continue;
        EXPECT_TRUE(E.on_curve(P.x, P.y));
        EXPECT_EQ(&P.residue_field(), &E.extension(P.degree));
    }
}

TEST(Elliptic, RingArithmetic) {
    const auto& F5 = FiniteField::get(5, 1);
    const Gf z = F5.zero(), o = F5.one();
    EllipticCurve E(F5, {o, z, z, F5.from_int(2), o});
    const auto x = E.x(), y = E.y();
    // y^2 + a1 x y reduces to the cubic
    EXPECT_EQ(y * y + x * y, x * x * x + E.constant(F5.from_int(2)) * x + E.constant(F5.from_int(1)));
    std::mt19937_64 rng(5);
    for (auto& [px, py] : E.affine_points(1)) {
        auto f = E.from_polynomials(random_poly(F5, 3, rng), random_poly(F5, 2, rng));
        auto g = E.from_polynomials(random_poly(F5, 2, rng), random_poly(F5, 2, rng));
        EXPECT_EQ(E.evaluate(f * g, px, py), E.evaluate(f, px, py) * E.evaluate(g, px, py));
        EXPECT_EQ(E.evaluate(f + g, px, py), E.evaluate(f, px, py) + E.evaluate(g, px, py));
        EXPECT_EQ(f.norm().degree(), -E.valuation(f, E.origin()));
    }
}

TEST(Elliptic, ExpansionsSatisfyTheEquation) {
    std::mt19937_64 rng(9);
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 1u}}) {
        const auto& k = FiniteField::get(p, m);
        for (int it = 0; it < 4; ++it) {
            std::array<Gf, 5> a;
            for (auto& c : a) c = k.element(rng() % k.order());
            std::unique_ptr<EllipticCurve> E;
            try {
                E = std::make_unique<EllipticCurve>(k, a);
            } catch (const std::invalid_argument&) {
                continue;
            }
            auto check = [&](const LaurentSeries& X, const LaurentSeries& Y) {
                const auto G = Y * Y + LaurentSeries::compose(E->h(), X) * Y - LaurentSeries::compose(E->g(), X);
                for (long e = -8; e < G.precision(); ++e) EXPECT_TRUE(G.coeff(e).is_zero()) << e;
            };
            auto [X, Y] = E->origin_expansion(12);
            EXPECT_EQ(X.valuation(), -2);
            EXPECT_EQ(Y.valuation(), -3);
            EXPECT_TRUE(X.coeff(-2).is_one());
            EXPECT_TRUE(Y.coeff(-3).is_one());
            EXPECT_GE(X.relative_precision(), 12);
            check(X, Y);
            // t = x/y
            const auto T = X * Y.inverse(12);
            EXPECT_EQ(T.valuation(), 1);
            for (long e = 2; e < T.precision(); ++e) EXPECT_TRUE(T.coeff(e).is_zero());
            for (auto& [px, py] : E->affine_points(1)) {
                const auto P = E->affine(px, py);
                auto [Xa, Ya] = E->affine_expansion(P, 12);
                EXPECT_EQ(Xa.coeff(0), px);
                EXPECT_EQ(Ya.coeff(0), py);
                check(Xa, Ya);
                // x - x0 has total zero degree 2 over the rational points above x0
                long total = 0;
                Gf ys[2];
                const int n = E->solve_y(px, E->h().evaluate(px), E->g().evaluate(px), ys);
                for (int j = 0; j < n; ++j) total += E->valuation(E->x() - E->constant(px), E->affine(px, ys[j]));
                EXPECT_EQ(total, 2);
            }
        }
    }
}
