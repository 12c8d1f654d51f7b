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

#ifndef ASWSUM_CYCLOTOMIC_HPP
#define ASWSUM_CYCLOTOMIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace aswsum {

/*
   Exact element of Z[zeta] for zeta = zeta_{p^l}, stored in the power basis 1, zeta, ...,
   zeta^{L-1} with L = p^{l-1}(p-1), i.e. reduced modulo Phi_{p^l}(X) = sum_i X^{i p^{l-1}}.
*/
class CyclotomicInteger {
   public:
    CyclotomicInteger() = default;
    CyclotomicInteger(unsigned p, unsigned l) : p_(p), l_(l), n_(checked_pow(p, l)), c_(basis_size(p, l)) {
        if (!is_prime(p) || l < 1) throw std::invalid_argument("cyclotomic order must be a prime power p^l, l >= 1");
    }

    static CyclotomicInteger from_int(unsigned p, unsigned l, const BigInt& v) {
        CyclotomicInteger z(p, l);
        z.c_[0] = v;
        return z;
    }

    static CyclotomicInteger zeta_power(unsigned p, unsigned l, long long k) {
        CyclotomicInteger z(p, l);
        z.add_zeta_power(static_cast<std::uint64_t>(reduce_signed(k, z.n_)), 1);
        return z;
    }

    /// sum_k counts[k] zeta^k, counts indexed by exponent mod p^l.
    template <class Count>
    static CyclotomicInteger from_histogram(unsigned p, unsigned l, const std::vector<Count>& counts) {
        CyclotomicInteger z(p, l);
        for (std::size_t k = 0; k < counts.size(); ++k)
            if (counts[k] != 0) z.add_zeta_power(k % z.n_, BigInt(counts[k]));
        return z;
    }

    unsigned p() const noexcept { return p_; }
    unsigned l() const noexcept { return l_; }
    std::uint64_t order() const noexcept { return n_; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    /// Adds count * zeta^k, 0 <= k < p^l.
    void add_zeta_power(std::uint64_t k, const BigInt& count) {
        const std::uint64_t L = c_.size();
        if (k < L) {
            c_[k] += count;
            return;
        }
        // zeta^{L+r} = -sum_{i<p-1} zeta^{i p^{l-1} + r}
        const std::uint64_t step = n_ / p_, r = k - L;
        for (unsigned i = 0; i + 1 < p_; ++i) c_[i * step + r] -= count;
    }

    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) {
        a.check(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) {
        a.check(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    CyclotomicInteger operator-() const {
        CyclotomicInteger r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        a.check(b);
        CyclotomicInteger r(a.p_, a.l_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.add_zeta_power((i + j) % a.n_, a.c_[i] * b.c_[j]);
            }
        }
        return r;
    }
    friend CyclotomicInteger operator*(const BigInt& s, CyclotomicInteger a) {
        for (auto& v : a.c_) v *= s;
        return a;
    }
    CyclotomicInteger& operator+=(const CyclotomicInteger& b) { return *this = *this + b; }
    CyclotomicInteger& operator-=(const CyclotomicInteger& b) { return *this = *this - b; }
    CyclotomicInteger& operator*=(const CyclotomicInteger& b) { return *this = *this * b; }

    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        return a.p_ == b.p_ && a.l_ == b.l_ && a.c_ == b.c_;
    }

    /// Image under zeta -> exp(2 pi i / p^l).
    std::complex<long double> to_complex() const {
        const long double two_pi = 6.283185307179586476925286766559L;
        std::complex<long double> acc = 0;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            const long double ang = two_pi * static_cast<long double>(k) / static_cast<long double>(n_);
            acc += static_cast<long double>(c_[k]) * std::complex<long double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

    long double abs() const { return std::abs(to_complex()); }

    /// Galois conjugate under zeta -> zeta^s, s prime to p.
    CyclotomicInteger conjugate(std::uint64_t s) const {
        if (s % p_ == 0) throw std::invalid_argument("Galois conjugation exponent must be prime to p");
        CyclotomicInteger r(p_, l_);
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) r.add_zeta_power(mulmod(k, s, n_), c_[k]);
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            BigInt v = c_[k];
            if (!first) os << (v < 0 ? "-" : "+");
            else if (v < 0) os << "-";
            if (v < 0) v = -v;
            first = false;
            if (k == 0 || v != 1) os << v;
            if (k > 0) {
                if (v != 1) os << "*";
                os << "z";
                if (k > 1) os << "^" << k;
            }
        }
        if (first) os << "0";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& z) { return os << z.to_string(); }

    static std::size_t basis_size(unsigned p, unsigned l) { return checked_pow(p, l - 1) * (p - 1); }

   private:
    void check(const CyclotomicInteger& b) const {
        if (p_ != b.p_ || l_ != b.l_) throw std::invalid_argument("cyclotomic elements of different orders");
    }

    unsigned p_ = 2;
    unsigned l_ = 1;
    std::uint64_t n_ = 2;
    std::vector<BigInt> c_ = std::vector<BigInt>(1);
};

/// Element of Q(zeta) as numerator / positive integer denominator, kept in lowest terms.
class CyclotomicRational {
   public:
    CyclotomicRational() = default;
    explicit CyclotomicRational(CyclotomicInteger num, BigInt den = 1) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("zero denominator");
        normalize();
    }

    const CyclotomicInteger& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }
    bool is_integral() const { return den_ == 1; }
    bool is_zero() const { return num_.is_zero(); }

    friend CyclotomicRational operator+(const CyclotomicRational& a, const CyclotomicRational& b) {
        return CyclotomicRational(a.den_ * b.num_ + b.den_ * a.num_, a.den_ * b.den_);
    }
    friend CyclotomicRational operator-(const CyclotomicRational& a, const CyclotomicRational& b) {
        return CyclotomicRational(b.den_ * a.num_ - a.den_ * b.num_, a.den_ * b.den_);
    }
    friend CyclotomicRational operator*(const CyclotomicRational& a, const CyclotomicRational& b) {
        return CyclotomicRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    CyclotomicRational divided(const BigInt& n) const {
        if (n == 0) throw std::domain_error("division by zero");
        return n < 0 ? CyclotomicRational(-num_, den_ * -n) : CyclotomicRational(num_, den_ * n);
    }
    friend bool operator==(const CyclotomicRational& a, const CyclotomicRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::complex<long double> to_complex() const {
        return num_.to_complex() / static_cast<long double>(den_);
    }

    std::string to_string() const {
        if (den_ == 1) return num_.to_string();
        std::ostringstream os;
        os << "(" << num_.to_string() << ")/" << den_;
        return os.str();
    }

   private:
    void normalize() {
        BigInt g = den_;
        for (const auto& v : num_.coeffs()) g = boost::multiprecision::gcd(g, v);
        if (g < 0) g = -g;
        if (g > 1) {
            std::vector<BigInt> c = num_.coeffs();
            CyclotomicInteger r(num_.p(), num_.l());
            for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k] != 0) r.add_zeta_power(k, c[k] / g);
            num_ = r;
            den_ /= g;
        }
    }

    CyclotomicInteger num_;
    BigInt den_ = 1;
};

}  // namespace aswsum

#endif  // ASWSUM_CYCLOTOMIC_HPP
