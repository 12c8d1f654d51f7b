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

#ifndef ASWSUM_LAURENT_HPP
#define ASWSUM_LAURENT_HPP

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "finite_field.hpp"
#include "polynomial.hpp"

namespace aswsum {

/// Thrown when a series has no known nonzero term where one is needed.
class PrecisionExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/*
   Truncated Laurent series sum_j c_j t^{start+j} + O(t^precision) over a finite field.
   Coefficients past the stored ones and below the precision are zero; precision kExact marks
   a series known exactly (a Laurent polynomial). The first stored coefficient is nonzero.
*/
class LaurentSeries {
   public:
    static constexpr long kExact = 1L << 40;

    LaurentSeries() = default;
    /// Exact zero.
    explicit LaurentSeries(const FiniteField& k) : k_(&k), start_(kExact), prec_(kExact) {}
    LaurentSeries(const FiniteField& k, long start, std::vector<Gf> coeffs, long precision)
        : k_(&k), start_(start), c_(std::move(coeffs)), prec_(std::min(precision, kExact)) {
        normalize();
    }

    static LaurentSeries monomial(const Gf& c, long e) {
        return LaurentSeries(c.field(), e, {c}, kExact);
    }
    /// t^shift * f(t), exact.
    static LaurentSeries from_polynomial(const FieldPoly& f, long shift = 0) {
        return LaurentSeries(f.field(), shift, f.coeffs(), kExact);
    }
    /// Zero known up to t^precision.
    static LaurentSeries big_o(const FiniteField& k, long precision) { return LaurentSeries(k, precision, {}, precision); }

    const FiniteField& field() const { return *k_; }
    const FiniteField* field_ptr() const noexcept { return k_; }
    long precision() const noexcept { return prec_; }
    bool is_exact() const noexcept { return prec_ >= kExact; }
    /// True when no nonzero term is known.
    bool is_zero() const noexcept { return c_.empty(); }
    bool valuation_known() const noexcept { return !c_.empty(); }
    /// Lower bound on the valuation; exact when valuation_known().
    long start() const noexcept { return start_; }
    long valuation() const {
        if (c_.empty()) throw PrecisionExhausted("series valuation unknown below precision " + std::to_string(prec_));
        return start_;
    }
    long relative_precision() const noexcept { return c_.empty() ? 0 : prec_ - start_; }
    Gf leading() const {
        if (c_.empty()) throw PrecisionExhausted("series has no known nonzero term");
        return c_.front();
    }
    /// Coefficient of t^e; throws if e is at or beyond the precision.
    Gf coeff(long e) const {
        if (e >= prec_) throw PrecisionExhausted("coefficient beyond series precision");
        if (e < start_ || e >= start_ + static_cast<long>(c_.size())) return k_->zero();
        return c_[e - start_];
    }
    const std::vector<Gf>& coeffs() const noexcept { return c_; }

    LaurentSeries truncated(long precision) const {
        LaurentSeries r = *this;
        r.prec_ = std::min(prec_, precision);
        r.normalize();
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        const FiniteField& k = a.common(b);
        const long prec = std::min(a.prec_, b.prec_);
        if (a.c_.empty() && a.start_ >= prec) return b.truncated(prec);
        if (b.c_.empty() && b.start_ >= prec) return a.truncated(prec);
        const long lo = std::min(a.start_, b.start_);
        long hi = std::max(a.start_ + static_cast<long>(a.c_.size()), b.start_ + static_cast<long>(b.c_.size()));
        hi = std::min(hi, prec);
        if (hi <= lo) return big_o(k, prec);
        std::vector<std::uint64_t> r(hi - lo, 0);
        for (std::size_t i = 0; i < a.c_.size() && a.start_ + static_cast<long>(i) < hi; ++i)
            r[a.start_ + i - lo] = a.c_[i].index();
        for (std::size_t i = 0; i < b.c_.size() && b.start_ + static_cast<long>(i) < hi; ++i)
            r[b.start_ + i - lo] = k.add(r[b.start_ + i - lo], b.c_[i].index());
        std::vector<Gf> out;
        out.reserve(r.size());
        for (auto v : r) out.emplace_back(k, v);
        return LaurentSeries(k, lo, std::move(out), prec);
    }
    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (Gf& g : r.c_) g = -g;
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        const FiniteField& k = a.common(b);
        const long prec = std::min({sat_add(a.start_, b.prec_), sat_add(b.start_, a.prec_), kExact});
        if (a.c_.empty() || b.c_.empty()) return big_o(k, prec);
        const long lo = a.start_ + b.start_;
        const long full = static_cast<long>(a.c_.size() + b.c_.size()) - 1;
        const long len = std::min(full, prec - lo);
        if (len <= 0) return big_o(k, prec);
        std::vector<std::uint64_t> r(len, 0);
        for (long i = 0; i < static_cast<long>(a.c_.size()) && i < len; ++i) {
            const std::uint64_t ai = a.c_[i].index();
            if (!ai) continue;
            const long jmax = std::min(static_cast<long>(b.c_.size()), len - i);
            for (long j = 0; j < jmax; ++j) {
                const std::uint64_t bj = b.c_[j].index();
                if (bj) r[i + j] = k.add(r[i + j], k.mul(ai, bj));
            }
        }
        std::vector<Gf> out;
        out.reserve(r.size());
        for (auto v : r) out.emplace_back(k, v);
        return LaurentSeries(k, lo, std::move(out), prec);
    }
    friend LaurentSeries operator*(const Gf& s, const LaurentSeries& a) {
        if (s.is_zero()) return LaurentSeries(a.field());
        LaurentSeries r = a;
        for (Gf& g : r.c_) g = g * s;
        return r;
    }
    LaurentSeries& operator+=(const LaurentSeries& b) { return *this = *this + b; }
    LaurentSeries& operator-=(const LaurentSeries& b) { return *this = *this - b; }
    LaurentSeries& operator*=(const LaurentSeries& b) { return *this = *this * b; }

    /// Multiplicative inverse; keeps the relative precision (capped at rel_cap for exact inputs).
    LaurentSeries inverse(long rel_cap) const {
        if (c_.empty()) throw PrecisionExhausted("inverse of a series with unknown valuation");
        const FiniteField& k = *k_;
        const long rel = std::min(relative_precision(), rel_cap);
        if (c_.size() == 1 && is_exact()) return LaurentSeries(k, -start_, {c_[0].inverse()}, kExact);
        std::vector<std::uint64_t> r(rel, 0);
        const std::uint64_t inv = k.inv(c_[0].index());
        r[0] = inv;
        for (long n = 1; n < rel; ++n) {
            std::uint64_t acc = 0;
            const long jmax = std::min<long>(n, static_cast<long>(c_.size()) - 1);
            for (long j = 1; j <= jmax; ++j) acc = k.add(acc, k.mul(c_[j].index(), r[n - j]));
            r[n] = k.mul(k.neg(acc), inv);
        }
        std::vector<Gf> out;
        for (auto v : r) out.emplace_back(k, v);
        return LaurentSeries(k, -start_, std::move(out), -start_ + rel);
    }

    /// Shift by t^e.
    LaurentSeries shifted(long e) const {
        LaurentSeries r = *this;
        r.start_ = sat_add(r.start_, e);
        r.prec_ = std::min(sat_add(r.prec_, e), kExact);
        return r;
    }

    /// f(s) for a polynomial f and a series s (Horner).
    static LaurentSeries compose(const FieldPoly& f, const LaurentSeries& s) {
        LaurentSeries acc(s.field());
        for (std::size_t i = f.coeffs().size(); i-- > 0;)
            acc = acc * s + LaurentSeries(s.field(), 0, {f.coeffs()[i]}, kExact);
        return acc;
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.k_ == b.k_ && a.prec_ == b.prec_ && a.c_ == b.c_ && (a.c_.empty() || a.start_ == b.start_);
    }

    std::string to_string(const std::string& var = "t") const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const long e = start_ + static_cast<long>(i);
            if (!first) os << " + ";
            first = false;
            const std::string cs = c_[i].to_string();
            const bool compound = cs.find('+') != std::string::npos;
            if (e == 0) {
                os << cs;
                continue;
            }
            if (!c_[i].is_one()) os << (compound ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        if (!is_exact()) os << (first ? "" : " + ") << "O(" << var << "^" << prec_ << ")";
        else if (first) os << "0";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << s.to_string(); }

   private:
    static long sat_add(long a, long b) {
        if (a >= kExact || b >= kExact) return kExact;
        return a + b;
    }

    void normalize() {
        if (start_ + static_cast<long>(c_.size()) > prec_)
            c_.resize(static_cast<std::size_t>(std::max(0L, prec_ - start_)), k_->zero());
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            start_ = prec_;
            return;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            start_ += static_cast<long>(lead);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const FiniteField& common(const LaurentSeries& b) const {
        if (k_ != b.k_ || !k_) throw std::invalid_argument("series over different fields");
        return *k_;
    }

    const FiniteField* k_ = nullptr;
    long start_ = kExact;
    std::vector<Gf> c_;
    long prec_ = kExact;
};

template <>
struct coefficient_traits<LaurentSeries> {
    static LaurentSeries zero_like(const LaurentSeries& a) { return LaurentSeries(a.field()); }
    static LaurentSeries one_like(const LaurentSeries& a) { return LaurentSeries::monomial(a.field().one(), 0); }
    static LaurentSeries scale(const LaurentSeries& a, long long n) { return a.field().from_int(n) * a; }
    static bool same_ring(const LaurentSeries& a, const LaurentSeries& b) { return a.field_ptr() == b.field_ptr(); }
    static constexpr bool characteristic_zero = false;
};

}  // namespace aswsum

#endif  // ASWSUM_LAURENT_HPP
