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

#ifndef ASWSUM_POLYNOMIAL_HPP
#define ASWSUM_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "finite_field.hpp"

namespace aswsum {

/// Univariate polynomial over a FiniteField, coefficients lowest degree first, no trailing zeros.
class FieldPoly {
   public:
    FieldPoly() = default;
    explicit FieldPoly(const FiniteField& k) : k_(&k) {}
    FieldPoly(const FiniteField& k, std::vector<Gf> coeffs) : k_(&k), c_(std::move(coeffs)) {
        for (const Gf& g : c_)
            if (g.field_ptr() != k_) throw std::invalid_argument("polynomial coefficient from a different field");
        trim();
    }

    static FieldPoly constant(const Gf& c) { return FieldPoly(c.field(), {c}); }
    static FieldPoly monomial(const Gf& c, unsigned e) {
        std::vector<Gf> v(e + 1, c.field().zero());
        v[e] = c;
        return FieldPoly(c.field(), std::move(v));
    }
    static FieldPoly x(const FiniteField& k) { return monomial(k.one(), 1); }
    /// Monic polynomial x^d + sum_{i<d} c_i x^i where (c_i) are the base-q digits of index.
    static FieldPoly from_index(const FiniteField& k, unsigned d, std::uint64_t index) {
        std::vector<Gf> v;
        for (unsigned i = 0; i < d; ++i) {
            v.push_back(k.element(index % k.order()));
            index /= k.order();
        }
        v.push_back(k.one());
        return FieldPoly(k, std::move(v));
    }

    const FiniteField& field() const { return *k_; }
    const FiniteField* field_ptr() const noexcept { return k_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    const std::vector<Gf>& coeffs() const noexcept { return c_; }
    Gf coeff(std::size_t i) const { return i < c_.size() ? c_[i] : k_->zero(); }
    Gf leading() const { return c_.empty() ? k_->zero() : c_.back(); }
    /// Lowest exponent with a nonzero coefficient (the x-adic valuation); -1 for zero.
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
        const FiniteField& k = a.common(b);
        std::vector<Gf> r(std::max(a.c_.size(), b.c_.size()), k.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return FieldPoly(k, std::move(r));
    }
    FieldPoly operator-() const {
        FieldPoly r = *this;
        for (Gf& g : r.c_) g = -g;
        return r;
    }
    friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) { return a + (-b); }
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
        const FiniteField& k = a.common(b);
        if (a.is_zero() || b.is_zero()) return FieldPoly(k);
        std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const std::uint64_t ai = a.c_[i].index();
            if (!ai) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(ai, b.c_[j].index()));
        }
        std::vector<Gf> out;
        out.reserve(r.size());
        for (auto v : r) out.emplace_back(k, v);
        return FieldPoly(k, std::move(out));
    }
    friend FieldPoly operator*(const Gf& s, const FieldPoly& a) {
        FieldPoly r = a;
        for (Gf& g : r.c_) g = g * s;
        r.trim();
        return r;
    }
    FieldPoly& operator+=(const FieldPoly& b) { return *this = *this + b; }
    FieldPoly& operator-=(const FieldPoly& b) { return *this = *this - b; }
    FieldPoly& operator*=(const FieldPoly& b) { return *this = *this * b; }

    /// (quotient, remainder) of Euclidean division.
    static std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
        const FiniteField& k = a.common(b);
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {FieldPoly(k), a};
        std::vector<std::uint64_t> r;
        for (const Gf& g : a.c_) r.push_back(g.index());
        const int db = b.degree();
        std::vector<std::uint64_t> q(a.degree() - db + 1, 0);
        const std::uint64_t inv = k.inv(b.leading().index());
        for (int d = a.degree(); d >= db; --d) {
            if (!r[d]) continue;
            const std::uint64_t c = k.mul(r[d], inv);
            q[d - db] = c;
            for (int i = 0; i <= db; ++i) r[d - db + i] = k.sub(r[d - db + i], k.mul(c, b.c_[i].index()));
        }
        std::vector<Gf> qq, rr;
        for (auto v : q) qq.emplace_back(k, v);
        for (int i = 0; i < db; ++i) rr.emplace_back(k, r[i]);
        return {FieldPoly(k, std::move(qq)), FieldPoly(k, std::move(rr))};
    }
    friend FieldPoly operator/(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).first; }
    friend FieldPoly operator%(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).second; }

    friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.k_ == b.k_ && a.c_ == b.c_; }
    /// Degree first, then coefficients from the top; for monic polynomials this orders by index.
    friend bool operator<(const FieldPoly& a, const FieldPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.c_[i].index() != b.c_[i].index()) return a.c_[i].index() < b.c_[i].index();
        return false;
    }

    FieldPoly monic() const {
        if (is_zero()) return *this;
        return leading().inverse() * *this;
    }

    FieldPoly derivative() const {
        if (c_.size() <= 1) return FieldPoly(*k_);
        std::vector<Gf> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(coefficient_traits<Gf>::scale(c_[i], static_cast<long long>(i)));
        return FieldPoly(*k_, std::move(r));
    }

    Gf evaluate(const Gf& x) const {
        if (x.field_ptr() != k_) throw std::invalid_argument("evaluation point from a different field");
        std::uint64_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = k_->add(k_->mul(acc, x.index()), c_[i].index());
        return Gf(*k_, acc);
    }

    /// f(g) by Horner.
    FieldPoly compose(const FieldPoly& g) const {
        FieldPoly acc(*k_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
        return acc;
    }

    /// Apply the p-power Frobenius k times to each coefficient.
    FieldPoly map_coefficients_frobenius(unsigned k = 1) const {
        FieldPoly r = *this;
        for (Gf& g : r.c_) g = g.frobenius(k);
        return r;
    }

    FieldPoly pow(std::uint64_t e) const { return ring_power(*this, e); }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Gf& c = c_[i];
            if (c.is_zero()) continue;
            const std::string cs = c.to_string();
            const bool compound = cs.find('+') != std::string::npos;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << (compound ? "(" + cs + ")" : cs);
                continue;
            }
            if (!c.is_one()) os << (compound ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const FieldPoly& f) { return os << f.to_string(); }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    const FiniteField& common(const FieldPoly& b) const {
        if (k_ != b.k_ || !k_) throw std::invalid_argument("polynomials over different fields");
        return *k_;
    }

    const FiniteField* k_ = nullptr;
    std::vector<Gf> c_;
};

template <>
struct coefficient_traits<FieldPoly> {
    static FieldPoly zero_like(const FieldPoly& a) { return FieldPoly(a.field()); }
    static FieldPoly one_like(const FieldPoly& a) { return FieldPoly::constant(a.field().one()); }
    static FieldPoly scale(const FieldPoly& a, long long n) { return a.field().from_int(n) * a; }
    static bool same_ring(const FieldPoly& a, const FieldPoly& b) { return a.field_ptr() == b.field_ptr(); }
    static constexpr bool characteristic_zero = false;
};

/// Monic gcd; gcd(0,0) = 0.
inline FieldPoly gcd(FieldPoly a, FieldPoly b) {
    while (!b.is_zero()) {
        FieldPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s a + t b = g = gcd(a, b), g monic.
inline std::tuple<FieldPoly, FieldPoly, FieldPoly> extended_gcd(const FieldPoly& a, const FieldPoly& b) {
    const FiniteField& k = a.field();
    FieldPoly r0 = a, r1 = b, s0 = FieldPoly::constant(k.one()), s1(k), t0(k), t1 = FieldPoly::constant(k.one());
    while (!r1.is_zero()) {
        auto [q, r] = FieldPoly::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FieldPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Gf inv = r0.leading().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

/// base^e mod m.
inline FieldPoly powmod(FieldPoly base, BigInt e, const FieldPoly& m) {
    FieldPoly r = FieldPoly::constant(m.field().one()) % m;
    base = base % m;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

namespace detail {

inline FieldPoly pth_root_poly(const FieldPoly& f) {
    const unsigned p = f.field().characteristic();
    std::vector<Gf> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i).pth_root());
    return FieldPoly(f.field(), std::move(c));
}

/// Splits a squarefree monic polynomial whose irreducible factors all have degree d.
inline void equal_degree_split(const FieldPoly& g, unsigned d, std::mt19937_64& rng, std::vector<FieldPoly>& out) {
    if (g.degree() <= static_cast<int>(d)) {
        if (g.degree() > 0) out.push_back(g);
        return;
    }
    const FiniteField& k = g.field();
    const BigInt qd = pow(BigInt(k.order()), d);
    const unsigned p = k.characteristic();
    for (;;) {
        std::vector<Gf> rc;
        for (int i = 0; i < g.degree(); ++i) rc.push_back(k.element(rng() % k.order()));
        FieldPoly a(k, std::move(rc));
        if (a.is_constant()) continue;
        FieldPoly b(k);
        if (p == 2) {
            // trace map a + a^2 + ... + a^{2^{s-1}} with q^d = 2^s
            const unsigned s = d * k.degree();
            FieldPoly t = a % g;
            b = t;
            for (unsigned i = 1; i < s; ++i) {
                t = (t * t) % g;
                b += t;
            }
        } else {
            b = powmod(a, (qd - 1) / 2, g) - FieldPoly::constant(k.one());
        }
        FieldPoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Squarefree decomposition of a monic polynomial: pairs (squarefree factor, multiplicity).
inline std::vector<std::pair<FieldPoly, unsigned>> squarefree_decomposition(const FieldPoly& f0) {
    std::vector<std::pair<FieldPoly, unsigned>> out;
    if (f0.degree() <= 0) return out;
    const FieldPoly f = f0.monic();
    const unsigned p = f.field().characteristic();
    const FieldPoly df = f.derivative();
    FieldPoly c = gcd(f, df);
    FieldPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FieldPoly y = gcd(w, c);
        FieldPoly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_decomposition(detail::pth_root_poly(c))) out.emplace_back(g, e * p);
    }
    return out;
}

/// Complete factorization into monic irreducibles with multiplicities, sorted by (degree, index).
inline std::vector<std::pair<FieldPoly, unsigned>> factor(const FieldPoly& f) {
    if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    std::vector<std::pair<FieldPoly, unsigned>> out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    const FiniteField& k = f.field();
    const FieldPoly x = FieldPoly::x(k);
    for (auto& [sq, mult] : squarefree_decomposition(f)) {
        FieldPoly rest = sq;
        FieldPoly h = x % rest;
        for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
            h = powmod(h, k.order(), rest);
            FieldPoly g = gcd(h - x, rest);
            if (g.degree() > 0) {
                std::vector<FieldPoly> parts;
                detail::equal_degree_split(g, d, rng, parts);
                for (auto& part : parts) out.emplace_back(part, mult);
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.degree() > 0) out.emplace_back(rest, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

inline bool is_irreducible(const FieldPoly& f) {
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const FieldPoly g = f.monic();
    const FiniteField& k = g.field();
    const FieldPoly x = FieldPoly::x(k);
    auto frob_power = [&](unsigned times) {
        FieldPoly h = x % g;
        for (unsigned i = 0; i < times; ++i) h = powmod(h, k.order(), g);
        return h;
    };
    if (!(frob_power(static_cast<unsigned>(n)) - x % g).is_zero()) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n)))
        if (gcd(frob_power(static_cast<unsigned>(n / r)) - x, g).degree() != 0) return false;
    return true;
}

/// Distinct roots in the coefficient field, sorted by index.
inline std::vector<Gf> roots(const FieldPoly& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<Gf> out;
    if (f.degree() <= 0) return out;
    const FiniteField& k = f.field();
    const FieldPoly g = f.monic();
    const FieldPoly x = FieldPoly::x(k);
    FieldPoly split = gcd(powmod(x, k.order(), g) - x, g);
    std::mt19937_64 rng(0x243f6a8885a308d3ull);
    std::vector<FieldPoly> lin;
    detail::equal_degree_split(split, 1, rng, lin);
    for (const auto& l : lin) out.push_back(-l.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

/// Monic irreducible polynomials of degree d over k, in increasing index order.
inline std::vector<FieldPoly> monic_irreducibles(const FiniteField& k, unsigned d) {
    const std::uint64_t count = checked_pow(k.order(), d);
    if (count > kEnumerationCap) throw CapExceeded("too many polynomials of degree " + std::to_string(d));
    std::vector<FieldPoly> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FieldPoly f = FieldPoly::from_index(k, d, idx);
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace aswsum

#endif  // ASWSUM_POLYNOMIAL_HPP
