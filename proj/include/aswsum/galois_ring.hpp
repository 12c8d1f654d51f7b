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

#ifndef ASWSUM_GALOIS_RING_HPP
#define ASWSUM_GALOIS_RING_HPP

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
#include "cyclotomic.hpp"
#include "embedding.hpp"
#include "finite_field.hpp"
#include "witt.hpp"

namespace aswsum {

class GrElement;

/*
   GR(p^l, m) = (Z/p^l)[a]/(M(a)) where M is the coefficient-wise integer lift of the residue
   field modulus. Elements are coefficient vectors of length m over Z/p^l.
*/
class GaloisRing {
   public:
    static const GaloisRing& get(const FiniteField& k, unsigned l) {
        static std::mutex mutex;
        static std::map<std::pair<const FiniteField*, unsigned>, std::unique_ptr<GaloisRing>> registry;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = registry[{&k, l}];
        if (!slot) slot = std::make_unique<GaloisRing>(k, l);
        return *slot;
    }
    static const GaloisRing& get(unsigned p, unsigned l, unsigned m) { return get(FiniteField::get(p, m), l); }

    GaloisRing(const FiniteField& k, unsigned l) : k_(&k), params_(k.characteristic(), l), n_(params_.modulus()) {
        checked_pow(n_, k.degree());  // p^{lm} must fit
    }

    unsigned characteristic() const noexcept { return params_.p; }
    unsigned length() const noexcept { return params_.l; }
    unsigned degree() const noexcept { return k_->degree(); }
    WittParams witt_params() const noexcept { return params_; }
    /// p^l.
    std::uint64_t modulus_integer() const noexcept { return n_; }
    std::uint64_t order() const { return checked_pow(n_, degree()); }
    const FiniteField& residue_field() const { return *k_; }
    const std::vector<std::uint64_t>& modulus() const { return k_->modulus(); }
    std::string name() const {
        return "GR(" + std::to_string(n_) + "," + std::to_string(degree()) + ")";
    }

    GrElement zero() const;
    GrElement one() const;
    GrElement from_int(long long v) const;
    GrElement from_coeffs(std::vector<std::uint64_t> c) const;
    /// The class of the variable a.
    GrElement generator() const;

    GrElement teichmuller(const Gf& a) const;
    Gf reduce(const GrElement& x) const;
    /// Teichmuller digits b_i with x = sum_i p^i [b_i].
    std::vector<Gf> teichmuller_digits(const GrElement& x) const;
    GrElement from_teichmuller_digits(const std::vector<Gf>& b) const;
    /// The Witt vector of x; coordinate i is b_i^{p^i} for the Teichmuller digits b_i.
    WittVector<Gf> to_witt(const GrElement& x) const;
    GrElement from_witt(const WittVector<Gf>& w) const;
    /// Ring Frobenius: p-th powers on Teichmuller digits.
    GrElement frobenius(const GrElement& x, unsigned times = 1) const;
    /// Trace down to Z/p^l as the sum of Galois conjugates.
    std::uint64_t absolute_trace(const GrElement& x) const;
    /// Trace down to Z/p^l as the trace of the multiplication matrix.
    std::uint64_t absolute_trace_matrix(const GrElement& x) const;
    std::vector<GrElement> teichmuller_set() const;

    // raw coefficient arithmetic
    std::vector<std::uint64_t> add(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> r(degree());
        for (unsigned i = 0; i < degree(); ++i) r[i] = (a[i] + b[i]) % n_;
        return r;
    }
    std::vector<std::uint64_t> sub(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> r(degree());
        for (unsigned i = 0; i < degree(); ++i) r[i] = (a[i] + n_ - b[i]) % n_;
        return r;
    }
    std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        const unsigned m = degree();
        if (m == 1) return {mulmod(a[0], b[0], n_)};
        std::vector<std::uint64_t> prod(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], n_)) % n_;
        }
        const auto& mod = modulus();
        for (unsigned d = 2 * m - 2; d >= m; --d) {
            const std::uint64_t c = prod[d];
            if (c) {
                for (unsigned i = 0; i < m; ++i) prod[d - m + i] = (prod[d - m + i] + n_ - mulmod(c, mod[i], n_)) % n_;
            }
            prod[d] = 0;
        }
        prod.resize(m);
        return prod;
    }

   private:
    const FiniteField* k_;
    WittParams params_;
    std::uint64_t n_;
};

class GrElement {
   public:
    GrElement() = default;
    GrElement(const GaloisRing& r, std::vector<std::uint64_t> c) : r_(&r), c_(std::move(c)) {
        if (c_.size() != r.degree()) throw std::invalid_argument("Galois ring element has the wrong length");
        for (auto& v : c_) v %= r.modulus_integer();
    }

    const GaloisRing& ring() const { return *r_; }
    const GaloisRing* ring_ptr() const noexcept { return r_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    bool is_zero() const {
        for (auto v : c_)
            if (v) return false;
        return true;
    }

    friend GrElement operator+(const GrElement& a, const GrElement& b) { return {a.check(b), a.r_->add(a.c_, b.c_)}; }
    friend GrElement operator-(const GrElement& a, const GrElement& b) { return {a.check(b), a.r_->sub(a.c_, b.c_)}; }
    friend GrElement operator*(const GrElement& a, const GrElement& b) { return {a.check(b), a.r_->mul(a.c_, b.c_)}; }
    GrElement operator-() const { return r_->zero() - *this; }
    GrElement& operator+=(const GrElement& b) { return *this = *this + b; }
    GrElement& operator*=(const GrElement& b) { return *this = *this * b; }
    GrElement pow(std::uint64_t e) const { return ring_power(*this, e); }

    friend bool operator==(const GrElement& a, const GrElement& b) { return a.r_ == b.r_ && a.c_ == b.c_; }

    std::string to_string() const {
        if (r_->degree() == 1) return std::to_string(c_[0]);
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
            if (!c_[i]) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || c_[i] != 1) os << c_[i];
            if (i > 0) os << (c_[i] != 1 ? "*a" : "a") << (i > 1 ? "^" + std::to_string(i) : "");
        }
        if (first) os << "0";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const GrElement& x) { return os << x.to_string(); }

   private:
    const GaloisRing& check(const GrElement& b) const {
        if (r_ != b.r_) throw std::invalid_argument("Galois ring elements from different rings");
        return *r_;
    }

    const GaloisRing* r_ = nullptr;
    std::vector<std::uint64_t> c_;
};

template <>
struct coefficient_traits<GrElement> {
    static GrElement zero_like(const GrElement& a) { return a.ring().zero(); }
    static GrElement one_like(const GrElement& a) { return a.ring().one(); }
    static GrElement scale(const GrElement& a, long long n) { return a * a.ring().from_int(n); }
    static bool same_ring(const GrElement& a, const GrElement& b) { return a.ring_ptr() == b.ring_ptr(); }
    static constexpr bool characteristic_zero = false;
};

inline GrElement GaloisRing::zero() const { return GrElement(*this, std::vector<std::uint64_t>(degree(), 0)); }
inline GrElement GaloisRing::one() const { return from_int(1); }
inline GrElement GaloisRing::from_int(long long v) const {
    std::vector<std::uint64_t> c(degree(), 0);
    c[0] = reduce_signed(v, n_);
    return GrElement(*this, std::move(c));
}
inline GrElement GaloisRing::from_coeffs(std::vector<std::uint64_t> c) const {
    c.resize(degree(), 0);
    return GrElement(*this, std::move(c));
}
inline GrElement GaloisRing::generator() const {
    if (degree() == 1) throw std::invalid_argument("GR(p^l,1) has no polynomial generator");
    std::vector<std::uint64_t> c(degree(), 0);
    c[1] = 1;
    return GrElement(*this, std::move(c));
}

inline Gf GaloisRing::reduce(const GrElement& x) const {
    std::vector<std::uint64_t> d;
    for (auto v : x.coeffs()) d.push_back(v % params_.p);
    return k_->from_digits(d);
}

inline GrElement GaloisRing::teichmuller(const Gf& a) const {
    if (a.field_ptr() != k_) throw std::invalid_argument("residue element from a different field");
    GrElement y = from_coeffs(k_->digits(a.index()));
    const std::uint64_t q = k_->order();
    for (unsigned it = 0; it <= 2 * params_.l; ++it) {
        GrElement z = y.pow(q);
        if (z == y) return y;
        y = z;
    }
    throw InternalError("Teichmuller iteration did not converge in " + name());
}

inline std::vector<Gf> GaloisRing::teichmuller_digits(const GrElement& x0) const {
    std::vector<Gf> out;
    GrElement x = x0;
    for (unsigned i = 0; i < params_.l; ++i) {
        const Gf b = reduce(x);
        out.push_back(b);
        if (i + 1 == params_.l) break;
        GrElement diff = x - teichmuller(b);
        std::vector<std::uint64_t> c = diff.coeffs();
        for (auto& v : c) {
            if (v % params_.p) throw InternalError("digit extraction left a unit remainder");
            v /= params_.p;
        }
        x = GrElement(*this, std::move(c));
    }
    return out;
}

inline GrElement GaloisRing::from_teichmuller_digits(const std::vector<Gf>& b) const {
    if (b.size() != params_.l) throw std::invalid_argument("need one Teichmuller digit per Witt coordinate");
    GrElement acc = zero();
    std::uint64_t pi = 1;
    for (unsigned i = 0; i < params_.l; ++i) {
        acc += from_int(static_cast<long long>(pi)) * teichmuller(b[i]);
        pi *= params_.p;
    }
    return acc;
}

inline WittVector<Gf> GaloisRing::to_witt(const GrElement& x) const {
    auto b = teichmuller_digits(x);
    for (unsigned i = 0; i < params_.l; ++i) b[i] = b[i].frobenius(i);
    return WittVector<Gf>(params_, std::move(b));
}

inline GrElement GaloisRing::from_witt(const WittVector<Gf>& w) const {
    if (w.params() != params_) throw std::invalid_argument("Witt vector parameters do not match " + name());
    std::vector<Gf> b = w.coords();
    const unsigned m = degree();
    for (unsigned i = 0; i < params_.l; ++i) b[i] = b[i].frobenius((m - i % m) % m);
    return from_teichmuller_digits(b);
}

inline GrElement GaloisRing::frobenius(const GrElement& x, unsigned times) const {
    if (degree() == 1 || times % degree() == 0) return x;
    auto b = teichmuller_digits(x);
    for (auto& d : b) d = d.frobenius(times);
    return from_teichmuller_digits(b);
}

inline std::uint64_t GaloisRing::absolute_trace(const GrElement& x) const {
    GrElement acc = zero(), c = x;
    for (unsigned j = 0; j < degree(); ++j) {
        acc += c;
        if (j + 1 < degree()) c = frobenius(c);
    }
    for (unsigned i = 1; i < degree(); ++i)
        if (acc.coeffs()[i]) throw InternalError("trace did not land in Z/p^l");
    return acc.coeffs()[0];
}

inline std::uint64_t GaloisRing::absolute_trace_matrix(const GrElement& x) const {
    std::uint64_t t = 0;
    for (unsigned i = 0; i < degree(); ++i) {
        std::vector<std::uint64_t> e(degree(), 0);
        e[i] = 1;
        t = (t + mul(x.coeffs(), e)[i]) % n_;
    }
    return t;
}

inline std::vector<GrElement> GaloisRing::teichmuller_set() const {
    std::vector<GrElement> out;
    for (std::uint64_t a = 0; a < k_->order(); ++a) out.push_back(teichmuller(k_->element(a)));
    return out;
}

/*
   GR(p^l, m) -> GR(p^l, m d), digitwise through the residue field embedding. The trace of the
   extension sums the d conjugates under the m-th power of the ring Frobenius.
*/
class GaloisRingExtension {
   public:
    GaloisRingExtension(const GaloisRing& base, const GaloisRing& ext)
        : base_(&base), ext_(&ext), emb_(&FieldEmbedding::get(base.residue_field(), ext.residue_field())) {
        if (base.length() != ext.length()) throw std::invalid_argument("Galois rings of different lengths");
    }

    const GaloisRing& base() const { return *base_; }
    const GaloisRing& ext() const { return *ext_; }

    GrElement map(const GrElement& x) const {
        auto b = base_->teichmuller_digits(x);
        std::vector<Gf> e;
        for (const Gf& d : b) e.push_back(emb_->map(d));
        return ext_->from_teichmuller_digits(e);
    }

    GrElement pull(const GrElement& y) const {
        auto b = ext_->teichmuller_digits(y);
        std::vector<Gf> e;
        for (const Gf& d : b) {
            auto pre = emb_->preimage(d);
            if (!pre) throw std::domain_error("element does not lie in " + base_->name());
            e.push_back(*pre);
        }
        return base_->from_teichmuller_digits(e);
    }

    GrElement trace(const GrElement& y) const {
        const unsigned d = ext_->degree() / base_->degree();
        GrElement acc = ext_->zero(), c = y;
        for (unsigned j = 0; j < d; ++j) {
            acc += c;
            c = ext_->frobenius(c, base_->degree());
        }
        return pull(acc);
    }

   private:
    const GaloisRing* base_;
    const GaloisRing* ext_;
    const FieldEmbedding* emb_;
};

/// psi_b(x) = zeta_{p^l}^{Tr(b x)}.
inline CyclotomicInteger additive_character(const GrElement& b, const GrElement& x) {
    const GaloisRing& r = b.ring();
    return CyclotomicInteger::zeta_power(r.characteristic(), r.length(),
                                         static_cast<long long>(r.absolute_trace(b * x)));
}

}  // namespace aswsum

#endif  // ASWSUM_GALOIS_RING_HPP
