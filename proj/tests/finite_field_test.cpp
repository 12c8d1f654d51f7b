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

#include <set>

#include "aswsum/finite_field.hpp"

using namespace aswsum;

namespace {

// independent arithmetic: polynomials over F_p as digit vectors, reduced by the field's modulus
std::uint64_t slow_mul(const FiniteField& k, std::uint64_t a, std::uint64_t b) {
    const unsigned p = k.characteristic(), m = k.degree();
    std::vector<std::uint64_t> da = k.digits(a), db = k.digits(b), prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& mod = k.modulus();
    for (int d = 2 * static_cast<int>(m) - 1; d >= static_cast<int>(m); --d) {
        const std::uint64_t c = prod[d];
        for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * mod[i]) % p;
    }
    prod.resize(m);
    return k.index_from_digits(prod);
}

}  // namespace

TEST(FiniteField, DefaultModuli) {
    EXPECT_EQ(FiniteField::get(2, 2).modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
    EXPECT_EQ(FiniteField::get(2, 3).modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
    EXPECT_EQ(FiniteField::get(3, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    EXPECT_EQ(FiniteField::get(2, 1).modulus(), (std::vector<std::uint64_t>{0, 1}));
    EXPECT_EQ(&FiniteField::get(2, 2), &FiniteField::get(2, 2));
}

TEST(FiniteField, RejectsBadDescriptors) {
    EXPECT_THROW(FiniteField::get(4, 1), std::invalid_argument);
    EXPECT_THROW(FiniteField::get(2, std::vector<std::uint64_t>{1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(FiniteField::get(3, std::vector<std::uint64_t>{1, 1, 2}), std::invalid_argument);
}

TEST(FiniteField, TablesAgreeWithPolynomialArithmetic) {
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {7, 1}, {3, 3}}) {
        const auto& k = FiniteField::get(p, m);
        ASSERT_TRUE(k.has_tables());
        for (std::uint64_t a = 0; a < k.order(); ++a)
            for (std::uint64_t b = 0; b < k.order(); ++b) {
                ASSERT_EQ(k.mul(a, b), slow_mul(k, a, b));
                auto da = k.digits(a), db = k.digits(b);
                for (unsigned i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
                ASSERT_EQ(k.add(a, b), k.index_from_digits(da));
            }
    }
}

TEST(FiniteField, FieldAxioms) {
    const auto& k = FiniteField::get(3, 2);
    for (std::uint64_t a = 1; a < k.order(); ++a) {
        Gf x = k.element(a);
        EXPECT_EQ(x * x.inverse(), k.one());
        EXPECT_EQ(x + (-x), k.zero());
        EXPECT_EQ(x.pow(k.order() - 1), k.one());
        EXPECT_EQ(x.pth_root().pow(3), x);
    }
    EXPECT_THROW(k.zero().inverse(), std::domain_error);
    // primitive element has full order
    std::set<std::uint64_t> seen;
    Gf g = k.primitive_element(), cur = k.one();
    for (std::uint64_t i = 0; i + 1 < k.order(); ++i, cur *= g) seen.insert(cur.index());
    EXPECT_EQ(seen.size(), k.order() - 1);
}

TEST(FiniteField, Formatting) {
    const auto& k = FiniteField::get(3, 2);
    EXPECT_EQ(k.element(0).to_string(), "0");
    EXPECT_EQ(k.element(5).to_string(), "a+2");
    EXPECT_EQ(k.element(6).to_string(), "2*a");
    EXPECT_EQ(k.generator().to_string(), "a");
    EXPECT_EQ(FiniteField::get(5, 1).from_int(-1).to_string(), "4");
}
