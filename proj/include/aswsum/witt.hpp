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

#ifndef ASWSUM_WITT_HPP
#define ASWSUM_WITT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "multipoly.hpp"

namespace aswsum {

/// Largest supported Witt length; universal polynomial size grows doubly exponentially in l.
inline constexpr unsigned kMaxWittLength = 4;

struct WittParams {
    unsigned p = 2;
    unsigned l = 1;

    WittParams() = default;
    WittParams(unsigned p_, unsigned l_) : p(p_), l(l_) {
        if (!is_prime(p)) throw std::invalid_argument("Witt vectors need a prime p, got " + std::to_string(p));
        if (l < 1 || l > kMaxWittLength)
            throw std::invalid_argument("Witt length must lie in [1, " + std::to_string(kMaxWittLength) + "], got " +
                                        std::to_string(l));
    }

    /// p^l as an integer.
    std::uint64_t modulus() const { return checked_pow(p, l); }

    friend bool operator==(const WittParams&, const WittParams&) = default;
    friend auto operator<=>(const WittParams&, const WittParams&) = default;
};

/*
   Sum, product and negation polynomials of W_l, in variables X_0..X_{l-1} (indices 0..l-1) and
   Y_0..Y_{l-1} (indices l..2l-1). They come from the ghost recursion over the integers

       w_n(X) = sum_{i<=n} p^i X_i^{p^{n-i}},
       P_n    = ( G_n - sum_{i<n} p^i P_i^{p^{n-i}} ) / p^n,

   with G_n = w_n(X)+w_n(Y), w_n(X)w_n(Y) and -w_n(X) respectively. Both the exact
   integer polynomials and their reductions mod p are kept.
*/
class UniversalWittPolys {
   public:
    explicit UniversalWittPolys(WittParams params) : params_(params) { build(); }

    /// Process-wide cache; the table for (p,l) is built once and shared read-only.
    static const UniversalWittPolys& get(WittParams params) {
        static std::mutex mutex;
        static std::map<WittParams, std::unique_ptr<UniversalWittPolys>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[params];
        if (!slot) slot = std::make_unique<UniversalWittPolys>(params);
        return *slot;
    }

    WittParams params() const noexcept { return params_; }

    const IntPoly& sum_integer(unsigned i) const { return sum_int_.at(i); }
    const IntPoly& product_integer(unsigned i) const { return prod_int_.at(i); }
    const IntPoly& negation_integer(unsigned i) const { return neg_int_.at(i); }
    const ReducedPoly& sum(unsigned i) const { return sum_.at(i); }
    const ReducedPoly& product(unsigned i) const { return prod_.at(i); }
    const ReducedPoly& negation(unsigned i) const { return neg_.at(i); }

    /// Ghost polynomial w_n in the X block (or the Y block if second is set).
    IntPoly ghost(unsigned n, bool second = false) const {
        const std::size_t nv = 2 * params_.l;
        IntPoly w(nv);
        BigInt pi = 1;
        for (unsigned i = 0; i <= n; ++i) {
            const std::uint64_t e = checked_pow(params_.p, n - i);
            w += IntPoly::variable(nv, (second ? params_.l : 0) + i, static_cast<std::uint32_t>(e)).scaled(pi);
            pi *= params_.p;
        }
        return w;
    }

    std::vector<std::string> variable_names() const {
        std::vector<std::string> names;
        for (unsigned i = 0; i < params_.l; ++i) names.push_back("X" + std::to_string(i));
        for (unsigned i = 0; i < params_.l; ++i) names.push_back("Y" + std::to_string(i));
        return names;
    }

   private:
    template <class Seed>
    std::vector<IntPoly> recurse(Seed seed) const {
        std::vector<IntPoly> out;
        std::vector<IntPoly> raised;  // raised[i] = out[i]^{p^{n-i}} for the current n
        BigInt pn = 1;
        for (unsigned n = 0; n < params_.l; ++n) {
            IntPoly acc = seed(n);
            BigInt pi = 1;
            for (unsigned i = 0; i < n; ++i) {
                raised[i] = raised[i].pow(params_.p);
                acc -= raised[i].scaled(pi);
                pi *= params_.p;
            }
            out.push_back(acc.divided_exact(pn));
            raised.push_back(out.back());
            pn *= params_.p;
        }
        return out;
    }

    void build() {
        sum_int_ = recurse([&](unsigned n) { return ghost(n) + ghost(n, true); });
        prod_int_ = recurse([&](unsigned n) { return ghost(n) * ghost(n, true); });
        neg_int_ = recurse([&](unsigned n) { return -ghost(n); });
        for (unsigned i = 0; i < params_.l; ++i) {
            sum_.emplace_back(sum_int_[i], params_.p);
            prod_.emplace_back(prod_int_[i], params_.p);
            neg_.emplace_back(neg_int_[i], params_.p);
        }
    }

    WittParams params_;
    std::vector<IntPoly> sum_int_, prod_int_, neg_int_;
    std::vector<ReducedPoly> sum_, prod_, neg_;
};

/// Length-l Witt vector over a coefficient ring R (see coefficient_traits).
template <class R>
class WittVector {
    using Traits = coefficient_traits<R>;

   public:
    using coefficient_type = R;

    WittVector(WittParams params, std::vector<R> coords) : params_(params), coords_(std::move(coords)) {
        if (coords_.size() != params_.l)
            throw std::invalid_argument("Witt vector needs " + std::to_string(params_.l) + " coordinates, got " +
                                        std::to_string(coords_.size()));
        for (const R& c : coords_)
            if (!Traits::same_ring(c, coords_.front()))
                throw std::invalid_argument("Witt vector coordinates lie in different rings");
    }

    static WittVector zero(WittParams params, const R& like) {
        return WittVector(params, std::vector<R>(params.l, Traits::zero_like(like)));
    }
    static WittVector one(WittParams params, const R& like) {
        std::vector<R> c(params.l, Traits::zero_like(like));
        c[0] = Traits::one_like(like);
        return WittVector(params, std::move(c));
    }
    /// Teichmuller representative (a, 0, ..., 0).
    static WittVector teichmuller(WittParams params, const R& a) {
        std::vector<R> c(params.l, Traits::zero_like(a));
        c[0] = a;
        return WittVector(params, std::move(c));
    }

    WittParams params() const noexcept { return params_; }
    unsigned length() const noexcept { return params_.l; }
    const R& operator[](std::size_t i) const { return coords_.at(i); }
    const std::vector<R>& coords() const noexcept { return coords_; }

    bool is_zero() const {
        const R z = Traits::zero_like(coords_.front());
        for (const R& c : coords_)
            if (!(c == z)) return false;
        return true;
    }

    friend bool operator==(const WittVector& a, const WittVector& b) {
        return a.params_ == b.params_ && a.coords_ == b.coords_;
    }

    friend WittVector operator+(const WittVector& a, const WittVector& b) { return combine(a, b, Op::Sum); }
    friend WittVector operator*(const WittVector& a, const WittVector& b) { return combine(a, b, Op::Product); }
    WittVector operator-() const {
        const auto& polys = UniversalWittPolys::get(params_);
        std::vector<R> vars = coords_;
        vars.insert(vars.end(), coords_.begin(), coords_.end());  // Y block unused by N_i
        std::vector<R> out;
        out.reserve(params_.l);
        for (unsigned i = 0; i < params_.l; ++i) {
            if constexpr (Traits::characteristic_zero) {
                out.push_back(polys.negation_integer(i).evaluate(vars));
            } else {
                out.push_back(polys.negation(i).evaluate(vars));
            }
        }
        return WittVector(params_, std::move(out));
    }
    friend WittVector operator-(const WittVector& a, const WittVector& b) { return a + (-b); }

    WittVector& operator+=(const WittVector& b) { return *this = *this + b; }
    WittVector& operator*=(const WittVector& b) { return *this = *this * b; }

   private:
    enum class Op { Sum, Product };

    static WittVector combine(const WittVector& a, const WittVector& b, Op op) {
        if (a.params_ != b.params_) throw std::invalid_argument("Witt vectors with different (p, l)");
        if (!Traits::same_ring(a.coords_.front(), b.coords_.front()))
            throw std::invalid_argument("Witt vectors over different coefficient rings");
        const auto& polys = UniversalWittPolys::get(a.params_);
        std::vector<R> vars = a.coords_;
        vars.insert(vars.end(), b.coords_.begin(), b.coords_.end());
        std::vector<R> out;
        out.reserve(a.params_.l);
        for (unsigned i = 0; i < a.params_.l; ++i) {
            if constexpr (Traits::characteristic_zero) {
                const IntPoly& poly = op == Op::Sum ? polys.sum_integer(i) : polys.product_integer(i);
                out.push_back(poly.evaluate(vars));
            } else {
                const ReducedPoly& poly = op == Op::Sum ? polys.sum(i) : polys.product(i);
                out.push_back(poly.evaluate(vars));
            }
        }
        return WittVector(a.params_, std::move(out));
    }

    WittParams params_;
    std::vector<R> coords_;
};

template <class R>
WittVector<R> witt_add(const WittVector<R>& a, const WittVector<R>& b) {
    return a + b;
}

template <class R>
WittVector<R> witt_mul(const WittVector<R>& a, const WittVector<R>& b) {
    return a * b;
}

template <class R>
WittVector<R> witt_neg(const WittVector<R>& a) {
    return -a;
}

template <class R>
WittVector<R> witt_sub(const WittVector<R>& a, const WittVector<R>& b) {
    return a - b;
}

/// V^k: shift in k zeros, dropping the last k coordinates.
template <class R>
WittVector<R> verschiebung(const WittVector<R>& a, unsigned k = 1) {
    const unsigned l = a.length();
    if (k > l) throw std::invalid_argument("Verschiebung shift exceeds the Witt length");
    std::vector<R> c(l, coefficient_traits<R>::zero_like(a[0]));
    for (unsigned i = k; i < l; ++i) c[i] = a[i - k];
    return WittVector<R>(a.params(), std::move(c));
}

/// F: raise every coordinate to the p-th power.
template <class R>
WittVector<R> frobenius(const WittVector<R>& a, unsigned times = 1) {
    std::vector<R> c = a.coords();
    for (unsigned t = 0; t < times; ++t)
        for (R& x : c) x = ring_power(x, a.params().p);
    return WittVector<R>(a.params(), std::move(c));
}

/// n * a by double-and-add; n may be negative.
template <class R>
WittVector<R> witt_scale(const WittVector<R>& a, long long n) {
    WittVector<R> result = WittVector<R>::zero(a.params(), a[0]);
    WittVector<R> base = n < 0 ? -a : a;
    unsigned long long k = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    while (k) {
        if (k & 1) result = result + base;
        k >>= 1;
        if (k) base = base + base;
    }
    return result;
}

/// Ghost components w_i = sum_{j<=i} p^j a_j^{p^{i-j}}; only meaningful over a characteristic-0 ring.
template <class R>
std::vector<R> ghost_components(const WittVector<R>& a) {
    if constexpr (!coefficient_traits<R>::characteristic_zero) {
        throw std::domain_error("ghost components need a characteristic-0 coefficient ring");
    } else {
        const unsigned p = a.params().p;
        std::vector<R> out;
        for (unsigned i = 0; i < a.length(); ++i) {
            R acc = coefficient_traits<R>::zero_like(a[0]);
            R pj = coefficient_traits<R>::one_like(a[0]);
            for (unsigned j = 0; j <= i; ++j) {
                acc = acc + pj * ring_power(a[j], checked_pow(p, i - j));
                pj = coefficient_traits<R>::scale(pj, p);
            }
            out.push_back(acc);
        }
        return out;
    }
}

template <class R>
std::ostream& operator<<(std::ostream& os, const WittVector<R>& a) {
    os << "(";
    for (unsigned i = 0; i < a.length(); ++i) os << (i ? "," : "") << a[i];
    return os << ")";
}

}  // namespace aswsum

#endif  // ASWSUM_WITT_HPP
