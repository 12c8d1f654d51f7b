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

#ifndef ASWSUM_RATIONAL_FUNCTION_HPP
#define ASWSUM_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "arith.hpp"
#include "embedding.hpp"
#include "polynomial.hpp"

namespace aswsum {

/// Element of k(x): coprime numerator and monic denominator.
class RationalFunction {
   public:
    RationalFunction() = default;
    explicit RationalFunction(const FiniteField& k) : num_(k), den_(FieldPoly::constant(k.one())) {}
    explicit RationalFunction(FieldPoly num) : num_(std::move(num)), den_(FieldPoly::constant(num_.field().one())) {}
    RationalFunction(FieldPoly num, FieldPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction constant(const Gf& c) { return RationalFunction(FieldPoly::constant(c)); }
    static RationalFunction x(const FiniteField& k) { return RationalFunction(FieldPoly::x(k)); }

    const FiniteField& field() const { return num_.field(); }
    const FiniteField* field_ptr() const noexcept { return num_.field_ptr(); }
    const FieldPoly& numerator() const noexcept { return num_; }
    const FieldPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    bool is_constant() const noexcept { return is_polynomial() && num_.degree() <= 0; }
    Gf constant_value() const {
        if (!is_constant()) throw std::domain_error("rational function is not constant");
        return num_.coeff(0);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("inverse of the zero function");
        return RationalFunction(den_, num_);
    }
    RationalFunction pow(std::uint64_t e) const { return RationalFunction(num_.pow(e), den_.pow(e)); }
    /// Integer power, negative exponents allowed.
    RationalFunction pow_signed(long long e) const { return e >= 0 ? pow(static_cast<std::uint64_t>(e)) : inverse().pow(static_cast<std::uint64_t>(-e)); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Value at a point of the constant field; throws at a pole.
    Gf evaluate(const Gf& x) const {
        const Gf d = den_.evaluate(x);
        if (d.is_zero()) throw PreconditionViolated("evaluation at a pole");
        return num_.evaluate(x) / d;
    }

    /// Image under a constant field embedding k -> k'.
    RationalFunction map(const FieldEmbedding& e) const { return RationalFunction(e.map(num_), e.map(den_)); }

    std::string to_string(const std::string& var = "x") const {
        if (is_polynomial()) return num_.to_string(var);
        auto wrap = [&](const FieldPoly& f) {
            const std::string s = f.to_string(var);
            return f.coeffs().size() > 1 && std::count_if(f.coeffs().begin(), f.coeffs().end(), [](const Gf& g) { return !g.is_zero(); }) > 1
                       ? "(" + s + ")"
                       : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

   private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.field_ptr() != den_.field_ptr()) throw std::invalid_argument("numerator and denominator over different fields");
        if (num_.is_zero()) {
            den_ = FieldPoly::constant(num_.field().one());
            return;
        }
        if (den_.degree() > 0) {
            FieldPoly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        const Gf lead = den_.leading();
        if (!lead.is_one()) {
            const Gf inv = lead.inverse();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    FieldPoly num_;
    FieldPoly den_;
};

template <>
struct coefficient_traits<RationalFunction> {
    static RationalFunction zero_like(const RationalFunction& a) { return RationalFunction(a.field()); }
    static RationalFunction one_like(const RationalFunction& a) { return RationalFunction::constant(a.field().one()); }
    static RationalFunction scale(const RationalFunction& a, long long n) {
        return RationalFunction(a.field().from_int(n) * a.numerator(), a.denominator());
    }
    static bool same_ring(const RationalFunction& a, const RationalFunction& b) { return a.field_ptr() == b.field_ptr(); }
    static constexpr bool characteristic_zero = false;
};

}  // namespace aswsum

#endif  // ASWSUM_RATIONAL_FUNCTION_HPP
