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

#ifndef ASWSUM_MULTIPOLY_HPP
#define ASWSUM_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace aswsum {

using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with big-integer coefficients.
class IntPoly {
   public:
    explicit IntPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static IntPoly variable(std::size_t nvars, std::size_t index, std::uint32_t exponent = 1) {
        IntPoly r(nvars);
        Monomial m(nvars, 0);
        m[index] = exponent;
        r.terms_.emplace(std::move(m), BigInt(1));
        return r;
    }

    static IntPoly constant(std::size_t nvars, const BigInt& c) {
        IntPoly r(nvars);
        if (c != 0) r.terms_.emplace(Monomial(nvars, 0), c);
        return r;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }

    IntPoly& operator+=(const IntPoly& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }
    IntPoly& operator-=(const IntPoly& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    IntPoly operator-() const {
        IntPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        IntPoly r(a.nvars_);
        Monomial m(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    IntPoly scaled(const BigInt& s) const {
        IntPoly r(nvars_);
        if (s == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    IntPoly pow(std::uint64_t e) const {
        IntPoly result = constant(nvars_, 1);
        IntPoly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    /// Divide every coefficient by d; throws InternalError if a division is inexact.
    IntPoly divided_exact(const BigInt& d) const {
        IntPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (c % d != 0) throw InternalError("inexact division in universal Witt polynomial recursion");
            r.terms_.emplace(m, c / d);
        }
        return r;
    }

    BigInt evaluate(const std::vector<BigInt>& values) const {
        BigInt acc = 0;
        for (const auto& [m, c] : terms_) {
            BigInt t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) t *= boost::multiprecision::pow(values[i], m[i]);
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

   private:
    void add_term(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t nvars_;
    std::map<Monomial, BigInt> terms_;
};

/// An integer polynomial with coefficients reduced into [1, p), laid out for fast evaluation.
class ReducedPoly {
   public:
    struct Term {
        long long coefficient;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent)
    };

    ReducedPoly() = default;

    ReducedPoly(const IntPoly& poly, std::uint64_t p) : nvars_(poly.nvars()), max_exponent_(poly.nvars(), 0) {
        const BigInt bp = p;
        for (const auto& [m, c] : poly.terms()) {
            BigInt r = c % bp;
            if (r < 0) r += bp;
            if (r == 0) continue;
            Term t{static_cast<long long>(r), {}};
            for (std::uint32_t v = 0; v < m.size(); ++v) {
                if (m[v]) {
                    t.factors.emplace_back(v, m[v]);
                    max_exponent_[v] = std::max(max_exponent_[v], m[v]);
                }
            }
            terms_.push_back(std::move(t));
        }
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::uint32_t max_exponent(std::size_t v) const { return max_exponent_.at(v); }

    /// Evaluate at values[0..nvars) in a ring R of characteristic p.
    template <class R>
    R evaluate(const std::vector<R>& values) const {
        using T = coefficient_traits<R>;
        R acc = T::zero_like(values.front());
        // powers[v][e-1] = values[v]^e, built up to the largest exponent that occurs
        std::vector<std::vector<R>> powers(nvars_);
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (max_exponent_[v] == 0) continue;
            powers[v].reserve(max_exponent_[v]);
            powers[v].push_back(values[v]);
            for (std::uint32_t e = 2; e <= max_exponent_[v]; ++e) powers[v].push_back(powers[v].back() * values[v]);
        }
        for (const Term& t : terms_) {
            R prod = T::one_like(values.front());
            bool first = true;
            for (const auto& [v, e] : t.factors) {
                if (first) {
                    prod = powers[v][e - 1];
                    first = false;
                } else {
                    prod = prod * powers[v][e - 1];
                }
            }
            acc = acc + (t.coefficient == 1 ? prod : T::scale(prod, t.coefficient));
        }
        return acc;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const Term& t : terms_) {
            if (!first) os << " + ";
            first = false;
            bool wrote = false;
            if (t.coefficient != 1 || t.factors.empty()) {
                os << t.coefficient;
                wrote = true;
            }
            for (const auto& [v, e] : t.factors) {
                if (wrote) os << "*";
                os << names.at(v);
                if (e != 1) os << "^" << e;
                wrote = true;
            }
        }
        return os.str();
    }

   private:
    std::size_t nvars_ = 0;
    std::vector<std::uint32_t> max_exponent_;
    std::vector<Term> terms_;
};

}  // namespace aswsum

#endif  // ASWSUM_MULTIPOLY_HPP
