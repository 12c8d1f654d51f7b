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

#ifndef ASWSUM_FINITE_FIELD_HPP
#define ASWSUM_FINITE_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace aswsum {

namespace detail {

/* Dense polynomials over F_p on plain integer coefficients, lowest degree first. Only used to
   find and validate moduli, and as the arithmetic of fields too large for log tables. */
using FpPoly = std::vector<std::uint64_t>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int fp_degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
    fp_trim(a);
    const int dm = fp_degree(m);
    const std::uint64_t inv_lead = invmod_prime(m.back(), p);
    while (fp_degree(a) >= dm) {
        const std::uint64_t c = mulmod(a.back(), inv_lead, p);
        const int shift = fp_degree(a) - dm;
        for (int i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    fp_trim(r);
    return r;
}

inline FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    fp_trim(a);
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// x^(p^k) mod m.
inline FpPoly fp_x_pow_p_k(unsigned k, const FpPoly& m, std::uint64_t p) {
    FpPoly r = fp_mod({0, 1}, m, p);
    for (unsigned i = 0; i < k; ++i) {
        FpPoly base = r, acc = {1};
        std::uint64_t e = p;
        while (e) {
            if (e & 1) acc = fp_mod(fp_mul(acc, base, p), m, p);
            e >>= 1;
            if (e) base = fp_mod(fp_mul(base, base, p), m, p);
        }
        r = acc;
    }
    return r;
}

/// Rabin's irreducibility test for a monic polynomial over F_p.
inline bool fp_is_irreducible(const FpPoly& f, std::uint64_t p) {
    const int n = fp_degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    const FpPoly x = {0, 1};
    if (fp_sub(fp_x_pow_p_k(static_cast<unsigned>(n), f, p), fp_mod(x, f, p), p).size() != 0) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
        FpPoly h = fp_sub(fp_x_pow_p_k(static_cast<unsigned>(n / r), f, p), fp_mod(x, f, p), p);
        if (fp_degree(fp_gcd(f, h, p)) != 0) return false;
    }
    return true;
}

}  // namespace detail

class Gf;

/*
   The finite field F_{p^m} = F_p[a]/(modulus). Elements are addressed by their index
   sum_i c_i p^i, where c_i is the coefficient of a^i. Fields with at most kTableLimit
   elements carry exp/log (and, for odd p, Zech) tables; larger fields fall back to
   polynomial arithmetic.

   Instances live in a process-wide registry and are never destroyed, so elements can hold a
   plain pointer to their field.
*/
class FiniteField {
   public:
    static constexpr std::uint64_t kTableLimit = 1ull << 24;
    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    /// F_{p^m} with the smallest-index monic irreducible modulus of degree m.
    static const FiniteField& get(unsigned p, unsigned m) { return registry_get(p, default_modulus(p, m)); }

    /// F_p[a]/(modulus) for an explicit monic irreducible modulus (coefficients lowest first).
    static const FiniteField& get(unsigned p, std::vector<std::uint64_t> modulus) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        for (auto& c : modulus) c %= p;
        detail::fp_trim(modulus);
        if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("field modulus must be monic");
        if (!detail::fp_is_irreducible(modulus, p)) throw std::invalid_argument("field modulus is not irreducible");
        return registry_get(p, std::move(modulus));
    }

    /// Smallest monic irreducible of degree m over F_p, ordered by the index of its lower coefficients.
    static std::vector<std::uint64_t> default_modulus(unsigned p, unsigned m) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
        if (m < 1) throw std::invalid_argument("field degree must be positive");
        const std::uint64_t count = checked_pow(p, m);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            detail::FpPoly f(m + 1, 0);
            std::uint64_t t = idx;
            for (unsigned i = 0; i < m; ++i) {
                f[i] = t % p;
                t /= p;
            }
            f[m] = 1;
            if (detail::fp_is_irreducible(f, p)) return f;
        }
        throw InternalError("no irreducible polynomial found");
    }

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return q_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    Gf zero() const;
    Gf one() const;
    /// The class of the polynomial variable, printed as "a".
    Gf generator() const;
    Gf primitive_element() const;
    Gf element(std::uint64_t index) const;
    Gf from_int(long long v) const;
    Gf from_digits(const std::vector<std::uint64_t>& digits) const;

    // Raw index arithmetic.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (p_ == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        if (has_tables()) {
            const std::uint64_t n = q_ - 1;
            const std::uint64_t la = log_[a], lb = log_[b];
            const std::uint32_t z = zech_[(lb + n - la) % n];
            if (z == kNoLog) return 0;
            return exp_[(la + z) % n];
        }
        std::uint64_t r = 0, pw = 1;
        for (unsigned i = 0; i < m_; ++i) {
            r += ((a % p_ + b % p_) % p_) * pw;
            a /= p_;
            b /= p_;
            pw *= p_;
        }
        return r;
    }

    std::uint64_t neg(std::uint64_t a) const {
        if (p_ == 2 || a == 0) return a;
        if (has_tables()) return exp_[(log_[a] + (q_ - 1) / 2) % (q_ - 1)];
        std::uint64_t r = 0, pw = 1;
        for (unsigned i = 0; i < m_; ++i) {
            r += ((p_ - a % p_) % p_) * pw;
            a /= p_;
            pw *= p_;
        }
        return r;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables()) return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
        return from_fp(detail::fp_mod(detail::fp_mul(to_fp(a), to_fp(b), p_), modulus_, p_));
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (has_tables()) return exp_[mulmod(log_[a], e % (q_ - 1), q_ - 1)];
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }

    /// a^{p^k}.
    std::uint64_t frobenius(std::uint64_t a, unsigned k = 1) const {
        for (unsigned i = 0; i < k % m_; ++i) a = pow(a, p_);
        return a;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
        if (has_tables()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        return pow(a, q_ - 2);
    }

    /// Discrete logarithm to the primitive element (tables only).
    std::uint32_t log(std::uint64_t a) const {
        if (!has_tables()) throw Unsupported("discrete log needs a tabulated field");
        if (a == 0) throw std::domain_error("log of zero");
        return log_[a];
    }
    std::uint64_t exp(std::uint64_t k) const {
        if (!has_tables()) throw Unsupported("exp needs a tabulated field");
        return exp_[k % (q_ - 1)];
    }

    std::vector<std::uint64_t> digits(std::uint64_t a) const {
        std::vector<std::uint64_t> d(m_);
        for (unsigned i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    std::uint64_t index_from_digits(const std::vector<std::uint64_t>& d) const {
        std::uint64_t r = 0, pw = 1;
        for (unsigned i = 0; i < m_; ++i) {
            r += (i < d.size() ? d[i] % p_ : 0) * pw;
            pw *= p_;
        }
        return r;
    }

    std::string format(std::uint64_t a) const {
        if (m_ == 1) return std::to_string(a);
        const auto d = digits(a);
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
            if (!d[i]) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << d[i];
            } else {
                if (d[i] != 1) os << d[i] << "*";
                os << "a";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

    std::string name() const { return "F_" + std::to_string(q_); }

    FiniteField(unsigned p, std::vector<std::uint64_t> modulus)
        : p_(p), m_(static_cast<unsigned>(modulus.size() - 1)), q_(checked_pow(p, m_)), modulus_(std::move(modulus)) {
        if (q_ <= kTableLimit) build_tables();
    }

   private:
    static const FiniteField& registry_get(unsigned p, std::vector<std::uint64_t> modulus) {
        static std::mutex mutex;
        static std::map<std::pair<unsigned, std::vector<std::uint64_t>>, std::unique_ptr<FiniteField>> registry;
        std::lock_guard<std::mutex> lock(mutex);
        auto key = std::make_pair(p, modulus);
        auto& slot = registry[key];
        if (!slot) slot = std::make_unique<FiniteField>(p, std::move(modulus));
        return *slot;
    }

    detail::FpPoly to_fp(std::uint64_t a) const {
        detail::FpPoly d = digits(a);
        detail::fp_trim(d);
        return d;
    }
    std::uint64_t from_fp(const detail::FpPoly& d) const { return index_from_digits(d); }

    void build_tables() {
        if (q_ == 2) {
            exp_ = {1};
            log_ = {kNoLog, 0};
            return;
        }
        const std::uint64_t n = q_ - 1;
        const auto factors = prime_factors(n);
        // search sparse candidates first (a, a+1, ..., 2a, ...) so the table walk multiplies by a short polynomial
        std::uint64_t g = 0;
        for (std::uint64_t cand = 2; cand < q_ && !g; ++cand) {
            bool primitive = true;
            for (std::uint64_t r : factors) {
                if (slow_pow(cand, n / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) g = cand;
        }
        if (!g) throw InternalError("no primitive element in " + name());
        primitive_ = g;
        exp_.resize(n);
        log_.assign(q_, kNoLog);
        const detail::FpPoly gp = to_fp(g);
        detail::FpPoly cur = {1};
        for (std::uint64_t k = 0; k < n; ++k) {
            const std::uint64_t idx = from_fp(cur);
            exp_[k] = static_cast<std::uint32_t>(idx);
            log_[idx] = static_cast<std::uint32_t>(k);
            cur = detail::fp_mod(detail::fp_mul(cur, gp, p_), modulus_, p_);
        }
        if (p_ != 2) {
            zech_.resize(n);
            for (std::uint64_t k = 0; k < n; ++k) {
                const std::uint64_t s = slow_add_one(exp_[k]);
                zech_[k] = s == 0 ? kNoLog : log_[s];
            }
        }
    }

    std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e) const {
        detail::FpPoly base = to_fp(a), acc = {1};
        while (e) {
            if (e & 1) acc = detail::fp_mod(detail::fp_mul(acc, base, p_), modulus_, p_);
            e >>= 1;
            if (e) base = detail::fp_mod(detail::fp_mul(base, base, p_), modulus_, p_);
        }
        return from_fp(acc);
    }

    std::uint64_t slow_add_one(std::uint64_t a) const {
        return a - a % p_ + (a % p_ + 1) % p_;
    }

    unsigned p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t primitive_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;

    friend class Gf;
};

/// An element of a FiniteField.
class Gf {
   public:
    Gf() = default;
    Gf(const FiniteField& field, std::uint64_t index) : field_(&field), v_(index) {}

    const FiniteField& field() const { return *field_; }
    const FiniteField* field_ptr() const noexcept { return field_; }
    std::uint64_t index() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    friend Gf operator+(const Gf& a, const Gf& b) { return Gf(*a.field_, a.check(b).add(a.v_, b.v_)); }
    friend Gf operator-(const Gf& a, const Gf& b) { return Gf(*a.field_, a.check(b).sub(a.v_, b.v_)); }
    friend Gf operator*(const Gf& a, const Gf& b) { return Gf(*a.field_, a.check(b).mul(a.v_, b.v_)); }
    friend Gf operator/(const Gf& a, const Gf& b) {
        return Gf(*a.field_, a.check(b).mul(a.v_, a.field_->inv(b.v_)));
    }
    Gf operator-() const { return Gf(*field_, field_->neg(v_)); }
    Gf& operator+=(const Gf& b) { return *this = *this + b; }
    Gf& operator-=(const Gf& b) { return *this = *this - b; }
    Gf& operator*=(const Gf& b) { return *this = *this * b; }

    Gf inverse() const { return Gf(*field_, field_->inv(v_)); }
    Gf pow(std::uint64_t e) const { return Gf(*field_, field_->pow(v_, e)); }
    Gf frobenius(unsigned k = 1) const { return Gf(*field_, field_->frobenius(v_, k)); }
    /// The unique p-th root.
    Gf pth_root() const { return Gf(*field_, field_->frobenius(v_, field_->degree() - 1)); }

    friend bool operator==(const Gf& a, const Gf& b) noexcept { return a.field_ == b.field_ && a.v_ == b.v_; }
    friend bool operator<(const Gf& a, const Gf& b) noexcept { return a.v_ < b.v_; }

    std::string to_string() const { return field_ ? field_->format(v_) : "<null>"; }
    friend std::ostream& operator<<(std::ostream& os, const Gf& a) { return os << a.to_string(); }

   private:
    const FiniteField& check(const Gf& b) const {
        if (field_ != b.field_) throw std::invalid_argument("finite field elements from different fields");
        return *field_;
    }

    const FiniteField* field_ = nullptr;
    std::uint64_t v_ = 0;
};

inline Gf FiniteField::zero() const { return Gf(*this, 0); }
inline Gf FiniteField::one() const { return Gf(*this, 1); }
inline Gf FiniteField::generator() const { return m_ == 1 ? Gf(*this, 0) : Gf(*this, p_); }
inline Gf FiniteField::primitive_element() const {
    if (has_tables()) return Gf(*this, q_ == 2 ? 1 : primitive_);
    throw Unsupported("primitive element only tracked for tabulated fields");
}
inline Gf FiniteField::element(std::uint64_t index) const {
    if (index >= q_) throw std::out_of_range("element index out of range for " + name());
    return Gf(*this, index);
}
inline Gf FiniteField::from_int(long long v) const { return Gf(*this, reduce_signed(v, p_)); }
inline Gf FiniteField::from_digits(const std::vector<std::uint64_t>& d) const { return Gf(*this, index_from_digits(d)); }

template <>
struct coefficient_traits<Gf> {
    static Gf zero_like(const Gf& a) { return a.field().zero(); }
    static Gf one_like(const Gf& a) { return a.field().one(); }
    static Gf scale(const Gf& a, long long n) { return a * a.field().from_int(n); }
    static bool same_ring(const Gf& a, const Gf& b) { return a.field_ptr() == b.field_ptr(); }
    static constexpr bool characteristic_zero = false;
};

}  // namespace aswsum

#endif  // ASWSUM_FINITE_FIELD_HPP
