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

#include "aswsum/parse.hpp"

using namespace aswsum;

namespace {

TEST(Parse, FieldSpecs) {
    EXPECT_EQ(&parse::field("f2"), &FiniteField::get(2, 1));
    EXPECT_EQ(&parse::field("F_9"), &FiniteField::get(3, 2));
    EXPECT_EQ(&parse::field("2^3"), &FiniteField::get(2, 3));
    EXPECT_THROW(parse::field("f6"), ParseError);
    EXPECT_THROW(parse::field("fx"), ParseError);
    EXPECT_THROW(parse::field("1"), ParseError);
}

TEST(Parse, FieldLiterals) {
    const auto& k = FiniteField::get(5, 1);
    EXPECT_EQ(parse::field_element(k, "7"), k.from_int(2));
    EXPECT_EQ(parse::field_element(k, "-1"), k.from_int(4));
    EXPECT_EQ(parse::field_element(k, "1/2"), k.from_int(3));
    EXPECT_EQ(parse::field_element(k, "2^-1"), k.from_int(3));
    EXPECT_THROW(parse::field_element(k, "1/0"), PreconditionViolated);
    const auto& k4 = FiniteField::get(2, 2);
    const Gf a = k4.generator();
    EXPECT_EQ(parse::field_element(k4, "a^2+a+1"), k4.zero());
    EXPECT_EQ(parse::field_element(k4, "a^3"), k4.one());
    EXPECT_EQ(parse::field_element(k4, "(a+1)*a"), a * a + a);
}

TEST(Parse, Errors) {
    const auto& k = FiniteField::get(3, 1);
    for (const char* bad : {"", "x+", "(x", "x)", "x^y", "3 4", "$", "{1}", "z"})
        EXPECT_THROW(parse::rational_function(k, bad), ParseError) << bad;
}

TEST(Parse, RationalFunctions) {
    const auto& k = FiniteField::get(3, 1);
    const auto X = RationalFunction::x(k);
    const auto one = RationalFunction::constant(k.one());
    EXPECT_EQ(parse::rational_function(k, "x^2 - 2*x + 1"), (X - one) * (X - one));
    EXPECT_EQ(parse::rational_function(k, "x^-2"), (X * X).inverse());
    EXPECT_EQ(parse::rational_function(k, "1/(x+1) + x"), (X + one).inverse() + X);
    EXPECT_EQ(parse::rational_function(k, "- -x"), X);
    EXPECT_EQ(parse::rational_function(k, "2*x*3"), RationalFunction(k));
}

TEST(Parse, EllipticFunctions) {
    const auto& k = FiniteField::get(2, 1);
    const EllipticCurve E(k, {k.zero(), k.zero(), k.one(), k.zero(), k.zero()});
    const auto f = parse::elliptic_function(E, "y^2 + y");
    EXPECT_EQ(f, E.x().pow(3));
    EXPECT_EQ(parse::elliptic_function(E, "x*y + 1"), E.x() * E.y() + E.constant(k.one()));
    EXPECT_THROW(parse::elliptic_function(E, "1/x"), ParseError);
}

TEST(Parse, CurveSpecs) {
    const auto& k2 = FiniteField::get(2, 1);
    const auto c = parse::curve_coefficients(k2, "y^2+y=x^3");
    EXPECT_EQ(c[2], k2.one());
    EXPECT_TRUE(c[0].is_zero() && c[1].is_zero() && c[3].is_zero() && c[4].is_zero());
    const auto& k5 = FiniteField::get(5, 1);
    const auto d = parse::curve_coefficients(k5, "y^2 + x*y - x^3 = 2*x + 1");
    EXPECT_EQ(d[0], k5.one());
    EXPECT_EQ(d[3], k5.from_int(2));
    EXPECT_EQ(d[4], k5.one());
    // both sides scaled by 2
    const auto e = parse::curve_coefficients(k5, "2*y^2 = 2*x^3 + 4*x + 2");
    EXPECT_EQ(e[3], k5.from_int(2));
    EXPECT_EQ(e[4], k5.one());
    EXPECT_THROW(parse::curve_coefficients(k5, "y^2 = x^4"), ParseError);
    EXPECT_THROW(parse::curve_coefficients(k5, "y^2 = 2*x^3"), ParseError);
    EXPECT_THROW(parse::curve_coefficients(k5, "y^2 + x^3"), ParseError);
    EXPECT_THROW(parse::curve_coefficients(k5, "y^3 = x^3 + 1"), ParseError);
}

TEST(Parse, GaloisRingPolynomials) {
    const auto& R = GaloisRing::get(2, 2, 1);
    auto f = parse::gr_polynomial(R, "T^2 + 3*T - 1");
    ASSERT_EQ(f.size(), 3u);
    EXPECT_TRUE(f[0] == R.from_int(3));
    EXPECT_TRUE(f[1] == R.from_int(3));
    EXPECT_TRUE(f[2] == R.one());
    EXPECT_TRUE(parse::gr_polynomial(R, "4*T + 0").empty());
    // digits {0,1} = 0 + 2[1]
    EXPECT_TRUE(parse::gr_element(R, "{0,1}") == R.from_int(2));
    EXPECT_THROW(parse::gr_element(R, "{0,1,1}"), ParseError);
    EXPECT_THROW(parse::gr_element(R, "T"), ParseError);
    EXPECT_THROW(parse::gr_polynomial(R, "1/T"), ParseError);
    const auto& S = GaloisRing::get(3, 2, 2);
    const auto g = parse::gr_polynomial(S, "{a}*T");
    ASSERT_EQ(g.size(), 2u);
    EXPECT_TRUE(g[1] == S.teichmuller(S.residue_field().generator()));
}

TEST(Parse, WittVectors) {
    const auto& k = FiniteField::get(2, 1);
    const auto D = parse::rational_domain(k);
    const auto w = parse::witt_vector("(x^3 + x, (x+1)^-1)", 2, 2, D);
    EXPECT_EQ(w[0], parse::rational_function(k, "x^3+x"));
    EXPECT_EQ(w[1], parse::rational_function(k, "1/(x+1)"));
    EXPECT_THROW(parse::witt_vector("(x)", 2, 2, D), ParseError);
    EXPECT_THROW(parse::witt_vector("x, 0", 2, 2, D), ParseError);
    EXPECT_THROW(parse::witt_vector("(x,)", 2, 2, D), ParseError);
    const auto u = parse::witt_vector("(1, 0, a)", 2, 3, parse::field_domain(FiniteField::get(2, 2)));
    EXPECT_EQ(u[2], FiniteField::get(2, 2).generator());
}

}  // namespace
