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

#ifndef ASWSUM_ELLIPTIC_HPP
#define ASWSUM_ELLIPTIC_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "laurent.hpp"
#include "place.hpp"
#include "polynomial.hpp"

namespace aswsum {

class EllipticCurve;

/// u(x) + v(x) y in the coordinate ring of a Weierstrass model.
class EllipticFunction {
   public:
    EllipticFunction() = default;
    EllipticFunction(const EllipticCurve& e, FieldPoly u, FieldPoly v) : e_(&e), u_(std::move(u)), v_(std::move(v)) {}

    const EllipticCurve& curve() const { return *e_; }
    const EllipticCurve* curve_ptr() const noexcept { return e_; }
    const FieldPoly& u() const noexcept { return u_; }
    const FieldPoly& v() const noexcept { return v_; }
    const FiniteField& field() const { return u_.field(); }
    bool is_zero() const noexcept { return u_.is_zero() && v_.is_zero(); }
    bool is_constant() const noexcept { return v_.is_zero() && u_.degree() <= 0; }
    Gf constant_value() const {
        if (!is_constant()) throw std::domain_error("elliptic function is not constant");
        return u_.coeff(0);
    }

    friend EllipticFunction operator+(const EllipticFunction& a, const EllipticFunction& b) {
        a.check(b);
        return {*a.e_, a.u_ + b.u_, a.v_ + b.v_};
    }
    friend EllipticFunction operator-(const EllipticFunction& a, const EllipticFunction& b) {
        a.check(b);
        return {*a.e_, a.u_ - b.u_, a.v_ - b.v_};
    }
    EllipticFunction operator-() const { return {*e_, -u_, -v_}; }
    friend EllipticFunction operator*(const EllipticFunction& a, const EllipticFunction& b);
    friend EllipticFunction operator*(const Gf& s, const EllipticFunction& a) { return {*a.e_, s * a.u_, s * a.v_}; }
    EllipticFunction& operator+=(const EllipticFunction& b) { return *this = *this + b; }
    EllipticFunction& operator*=(const EllipticFunction& b) { return *this = *this * b; }
    EllipticFunction pow(std::uint64_t e) const { return ring_power(*this, e); }

    friend bool operator==(const EllipticFunction& a, const EllipticFunction& b) {
        return a.e_ == b.e_ && a.u_ == b.u_ && a.v_ == b.v_;
    }

    /// N(f) = f * conj(f) in k[x]; its degree is -v_O(f).
    FieldPoly norm() const;

    std::string to_string() const {
        if (v_.is_zero()) return u_.to_string();
        std::string s = v_.to_string();
        std::string vy = v_.is_one() ? "y" : (v_.coeffs().size() > 1 || s.find('+') != std::string::npos ? "(" + s + ")*y" : s + "*y");
        if (u_.is_zero()) return vy;
        return u_.to_string() + "+" + vy;
    }
    friend std::ostream& operator<<(std::ostream& os, const EllipticFunction& f) { return os << f.to_string(); }

   private:
    void check(const EllipticFunction& b) const {
        if (e_ != b.e_) throw std::invalid_argument("elliptic functions on different curves");
    }

    const EllipticCurve* e_ = nullptr;
    FieldPoly u_, v_;
};

/*
   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over k. Local parameters: t = x/y at the
   origin O, where x = t^{-2}(1 + ...) and y = t^{-3}(1 + ...); at a rational affine point,
   x - x0 when the y-derivative of the equation is nonzero there, else y - y0.
*/
class EllipticCurve {
   public:
    using function_type = EllipticFunction;

    EllipticCurve(const FiniteField& k, std::array<Gf, 5> a) : k_(&k), a_(a) {
        for (const Gf& c : a_)
            if (c.field_ptr() != k_) throw std::invalid_argument("curve coefficient from a different field");
        if (discriminant().is_zero()) throw std::invalid_argument("singular Weierstrass model (zero discriminant)");
        h_ = FieldPoly(k, {a_[2], a_[0]});
        g_ = FieldPoly(k, {a_[4], a_[3], a_[1], k.one()});
    }
    EllipticCurve(const EllipticCurve&) = delete;
    EllipticCurve& operator=(const EllipticCurve&) = delete;

    const FiniteField& constant_field() const { return *k_; }
    static constexpr unsigned genus() { return 1; }
    /// a1, a2, a3, a4, a6.
    const std::array<Gf, 5>& coefficients() const { return a_; }
    const FieldPoly& h() const { return h_; }
    const FieldPoly& g() const { return g_; }

    Gf discriminant() const {
        const Gf a1 = a_[0], a2 = a_[1], a3 = a_[2], a4 = a_[3], a6 = a_[4];
        auto n = [&](long long v) { return k_->from_int(v); };
        const Gf b2 = a1 * a1 + n(4) * a2, b4 = n(2) * a4 + a1 * a3, b6 = a3 * a3 + n(4) * a6;
        const Gf b8 = a1 * a1 * a6 + n(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        return -b2 * b2 * b8 - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
    }

    std::string name() const {
        static const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
        std::string s = "E[";
        for (int i = 0; i < 5; ++i) s += std::string(i ? "," : "") + names[i] + "=" + a_[i].to_string();
        return s + "]/" + k_->name();
    }

    EllipticFunction x() const { return {*this, FieldPoly::x(*k_), FieldPoly(*k_)}; }
    EllipticFunction y() const { return {*this, FieldPoly(*k_), FieldPoly::constant(k_->one())}; }
    EllipticFunction constant(const Gf& c) const { return {*this, FieldPoly::constant(c), FieldPoly(*k_)}; }
    EllipticFunction from_polynomials(FieldPoly u, FieldPoly v) const { return {*this, std::move(u), std::move(v)}; }

    /// Residue field of the places of degree d, F_{q^d} (k itself for d = 1).
    const FiniteField& extension(unsigned d) const {
        return d == 1 ? *k_ : FiniteField::get(k_->characteristic(), k_->degree() * d);
    }

    bool on_curve(const Gf& x, const Gf& y) const {
        const auto& F = x.field();
        const auto& emb = FieldEmbedding::get(*k_, F);
        const Gf hx = emb.map(h_).evaluate(x), gx = emb.map(g_).evaluate(x);
        return (y * y + hx * y - gx).is_zero();
    }

    Place origin() const {
        Place P;
        P.kind = Place::Kind::Origin;
        P.residue = k_;
        return P;
    }

    /// Place through the point (x, y) over F_{q^d}; the representative is the smallest point of its orbit.
    Place affine(const Gf& x, const Gf& y) const {
        if (!on_curve(x, y)) throw std::invalid_argument("point is not on the curve");
        const FiniteField& F = x.field();
        const unsigned m = k_->degree();
        Gf bx = x, by = y, cx = x, cy = y;
        unsigned deg = 1;
        for (;;) {
            cx = cx.frobenius(m);
            cy = cy.frobenius(m);
            if (cx == x && cy == y) break;
            if (std::make_pair(cx.index(), cy.index()) < std::make_pair(bx.index(), by.index())) {
                bx = cx;
                by = cy;
            }
            ++deg;
        }
        const FiniteField& R = extension(deg);
        Place P;
        P.kind = Place::Kind::Affine;
        P.degree = deg;
        P.residue = &R;
        if (&R == &F) {
            P.x = bx;
            P.y = by;
        } else {
            const auto& down = FieldEmbedding::get(R, F);
            P.x = down.pull(bx);
            P.y = down.pull(by);
            // re-minimize inside the residue field's own indexing
            Gf cx2 = P.x, cy2 = P.y;
            for (unsigned i = 1; i < deg; ++i) {
                cx2 = cx2.frobenius(m);
                cy2 = cy2.frobenius(m);
                if (std::make_pair(cx2.index(), cy2.index()) < std::make_pair(P.x.index(), P.y.index())) {
                    P.x = cx2;
                    P.y = cy2;
                }
            }
        }
        return P;
    }

    long valuation(const EllipticFunction& f, const Place& P) const {
        if (f.is_zero()) return kInfiniteValuation;
        if (P.kind == Place::Kind::Origin) {
            const long du = f.u().is_zero() ? kInfiniteValuation : -2L * f.u().degree();
            const long dv = f.v().is_zero() ? kInfiniteValuation : -2L * f.v().degree() - 3;
            return std::min(du, dv);
        }
        if (P.kind != Place::Kind::Affine) throw std::invalid_argument("not a place of an elliptic curve");
        if (!P.is_rational()) throw Unsupported("valuation at an affine place of degree > 1");
        const long bound = f.norm().degree() + 2;
        for (long rel = 8;; rel *= 2) {
            LaurentSeries s = laurent(f, P, std::min(rel, bound));
            if (s.valuation_known()) return s.valuation();
            if (rel >= bound) throw InternalError("nonzero elliptic function with unbounded valuation");
        }
    }

    /// Expansion of f at P; at O the result carries at least rel terms after the leading one.
    LaurentSeries laurent(const EllipticFunction& f, const Place& P, long rel) const {
        if (f.curve_ptr() != this) throw std::invalid_argument("function on a different curve");
        if (P.kind == Place::Kind::Origin) {
            auto [X, Y] = origin_expansion(rel + 4);
            return eval_series(f, X, Y);
        }
        if (P.kind != Place::Kind::Affine) throw std::invalid_argument("not a place of an elliptic curve");
        if (!P.is_rational()) throw Unsupported("Laurent expansion at an affine place of degree > 1");
        auto [X, Y] = affine_expansion(P, rel);
        return eval_series(f, X, Y);
    }

    /// Series (x(t), y(t)) at O with t = x/y, each with relative precision rel.
    std::pair<LaurentSeries, LaurentSeries> origin_expansion(long rel) const {
        const FiniteField& k = *k_;
        const Gf a1 = a_[0], a2 = a_[1], a3 = a_[2], a4 = a_[3], a6 = a_[4];
        const LaurentSeries t = LaurentSeries::monomial(k.one(), 1);
        auto c = [&](const Gf& v) { return LaurentSeries(k, 0, {v}, LaurentSeries::kExact); };
        const long target = rel + 3;
        // w = 1/y solves w + a1 t w + a3 w^2 = t^3 + a2 t^2 w + a4 t w^2 + a6 w^3
        LaurentSeries w = LaurentSeries::big_o(k, 4) + LaurentSeries::monomial(k.one(), 3);
        for (long have = 4; have < target;) {
            have = std::min(2 * have, target);
            LaurentSeries wh(k, w.start(), w.coeffs(), have);
            LaurentSeries w2 = wh * wh, w3 = w2 * wh;
            LaurentSeries F = wh + c(a1) * t * wh + c(a3) * w2 - t * t * t - c(a2) * t * t * wh - c(a4) * t * w2 - c(a6) * w3;
            LaurentSeries D = c(k.one()) + c(a1) * t + c(k.from_int(2) * a3) * wh - c(a2) * t * t -
                              c(k.from_int(2) * a4) * t * wh - c(k.from_int(3) * a6) * w2;
            w = (wh - F * D.inverse(have)).truncated(have);
        }
        LaurentSeries Y = w.inverse(rel);
        LaurentSeries X = t * Y;
        return {X, Y};
    }

    /// Series (x(t), y(t)) at a rational affine point, absolute precision prec.
    std::pair<LaurentSeries, LaurentSeries> affine_expansion(const Place& P, long prec) const {
        const FiniteField& k = *k_;
        const Gf x0 = P.x, y0 = P.y;
        const Gf gy = k.from_int(2) * y0 + h_.evaluate(x0);
        const LaurentSeries t = LaurentSeries::monomial(k.one(), 1);
        auto c = [&](const Gf& v) { return LaurentSeries(k, 0, {v}, LaurentSeries::kExact); };
        const FieldPoly dg = g_.derivative();
        if (!gy.is_zero()) {
            LaurentSeries X = c(x0) + t;
            LaurentSeries hX = LaurentSeries::compose(h_, X), gX = LaurentSeries::compose(g_, X);
            LaurentSeries Y = LaurentSeries::big_o(k, 1) + c(y0);
            for (long have = 1; have < prec;) {
                have = std::min(2 * have, prec);
                LaurentSeries Yh(k, Y.start(), Y.coeffs(), have);
                LaurentSeries F = Yh * Yh + hX * Yh - gX;
                LaurentSeries D = c(k.from_int(2)) * Yh + hX;
                Y = (Yh - F * D.inverse(have)).truncated(have);
            }
            return {X, Y};
        }
        LaurentSeries Y = c(y0) + t;
        LaurentSeries X = LaurentSeries::big_o(k, 1) + c(x0);
        for (long have = 1; have < prec;) {
            have = std::min(2 * have, prec);
            LaurentSeries Xh(k, X.start(), X.coeffs(), have);
            LaurentSeries F = Y * Y + LaurentSeries::compose(h_, Xh) * Y - LaurentSeries::compose(g_, Xh);
            LaurentSeries D = c(a_[0]) * Y - LaurentSeries::compose(dg, Xh);
            X = (Xh - F * D.inverse(have)).truncated(have);
        }
        return {X, Y};
    }

    /// A function in the coordinate ring with v_O = -s and leading coefficient 1, for s = 0 or s >= 2.
    EllipticFunction pole_monomial(long s) const {
        if (s < 0 || s == 1) throw std::invalid_argument("no coordinate-ring function with that pole order at O");
        const FiniteField& k = *k_;
        if (s % 2 == 0) return {*this, FieldPoly::monomial(k.one(), static_cast<unsigned>(s / 2)), FieldPoly(k)};
        return {*this, FieldPoly(k), FieldPoly::monomial(k.one(), static_cast<unsigned>((s - 3) / 2))};
    }

    std::vector<std::pair<Place, long>> pole_divisor(const EllipticFunction& f) const {
        std::vector<std::pair<Place, long>> out;
        if (f.is_zero()) return out;
        const long v = valuation(f, origin());
        if (v < 0) out.emplace_back(origin(), -v);
        return out;
    }

    /// The y-values over x, written to ys; returns how many (0, 1 or 2), in increasing index.
    int solve_y(const Gf& x, const Gf& hx, const Gf& gx, Gf ys[2]) const {
        const FiniteField& F = x.field();
        if (F.characteristic() != 2) {
            const Gf two = F.from_int(2);
            const Gf D = hx * hx + F.from_int(4) * gx;
            if (D.is_zero()) {
                ys[0] = -hx / two;
                return 1;
            }
            const std::uint32_t lg = F.log(D.index());
            if (lg % 2) return 0;
            const Gf s(F, F.exp(lg / 2));
            ys[0] = (s - hx) / two;
            ys[1] = (-s - hx) / two;
            if (ys[1] < ys[0]) std::swap(ys[0], ys[1]);
            return 2;
        }
        if (hx.is_zero()) {
            ys[0] = gx.pth_root();
            return 1;
        }
        const Gf cc = gx / (hx * hx);
        const auto& tab = artin_schreier_table(F);
        const std::uint32_t z = tab[cc.index()];
        if (z == kNoRoot) return 0;
        ys[0] = hx * Gf(F, z);
        ys[1] = hx * Gf(F, z ^ 1u);
        if (ys[1] < ys[0]) std::swap(ys[0], ys[1]);
        return 2;
    }

    /// Affine points over F_{q^d}, sorted by (x, y) index.
    std::vector<std::pair<Gf, Gf>> affine_points(unsigned d) const {
        const FiniteField& F = extension(d);
        if (F.order() > kEnumerationCap) throw CapExceeded("point enumeration over " + F.name() + " exceeds the cap");
        const auto& emb = FieldEmbedding::get(*k_, F);
        const FieldPoly h = emb.map(h_), g = emb.map(g_);
        std::vector<std::pair<Gf, Gf>> out;
        for (std::uint64_t i = 0; i < F.order(); ++i) {
            const Gf x = F.element(i);
            Gf ys[2];
            const int n = solve_y(x, h.evaluate(x), g.evaluate(x), ys);
            for (int j = 0; j < n; ++j) out.emplace_back(x, ys[j]);
        }
        return out;
    }

    /// #E(F_{q^d}), the origin included.
    std::uint64_t point_count(unsigned d) const { return affine_points(d).size() + 1; }

    std::vector<Place> places_up_to_degree(unsigned dmax) const {
        if (checked_pow(k_->order(), dmax) > kEnumerationCap) throw CapExceeded("place enumeration exceeds the cap");
        std::vector<Place> out{origin()};
        for (unsigned d = 1; d <= dmax; ++d) {
            const unsigned m = k_->degree();
            for (auto& [x, y] : affine_points(d)) {
                // keep the orbit minimum of each orbit of exact size d
                Gf cx = x, cy = y;
                bool minimal = true;
                unsigned size = 0;
                do {
                    cx = cx.frobenius(m);
                    cy = cy.frobenius(m);
                    ++size;
                    if (std::make_pair(cx.index(), cy.index()) < std::make_pair(x.index(), y.index())) minimal = false;
                } while (!(cx == x && cy == y));
                if (size == d && minimal) out.push_back(affine(x, y));
            }
        }
        return out;
    }

    /// f at an affine point over an extension of k.
    Gf evaluate(const EllipticFunction& f, const Gf& x, const Gf& y) const {
        const auto& emb = FieldEmbedding::get(*k_, x.field());
        return emb.map(f.u()).evaluate(x) + emb.map(f.v()).evaluate(x) * y;
    }

    static constexpr std::uint32_t kNoRoot = 0xffffffffu;

    /// For F of characteristic 2: table c -> z with z^2 + z = c (the even-index root), kNoRoot if none.
    static const std::vector<std::uint32_t>& artin_schreier_table(const FiniteField& F) {
        static std::mutex mutex;
        static std::map<const FiniteField*, std::unique_ptr<std::vector<std::uint32_t>>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[&F];
        if (!slot) {
            slot = std::make_unique<std::vector<std::uint32_t>>(F.order(), kNoRoot);
            for (std::uint64_t z = 0; z < F.order(); z += 2) (*slot)[F.add(F.mul(z, z), z)] = static_cast<std::uint32_t>(z);
        }
        return *slot;
    }

   private:
    LaurentSeries eval_series(const EllipticFunction& f, const LaurentSeries& X, const LaurentSeries& Y) const {
        return LaurentSeries::compose(f.u(), X) + LaurentSeries::compose(f.v(), X) * Y;
    }

    const FiniteField* k_;
    std::array<Gf, 5> a_;
    FieldPoly h_, g_;
};

inline EllipticFunction operator*(const EllipticFunction& a, const EllipticFunction& b) {
    a.check(b);
    const EllipticCurve& e = *a.e_;
    // y^2 = g - h y
    FieldPoly vv = a.v_ * b.v_;
    FieldPoly u = a.u_ * b.u_ + vv * e.g();
    FieldPoly v = a.u_ * b.v_ + a.v_ * b.u_ - vv * e.h();
    return {e, std::move(u), std::move(v)};
}

inline FieldPoly EllipticFunction::norm() const { return u_ * u_ - u_ * v_ * e_->h() - v_ * v_ * e_->g(); }

template <>
struct coefficient_traits<EllipticFunction> {
    static EllipticFunction zero_like(const EllipticFunction& a) { return a.curve().constant(a.field().zero()); }
    static EllipticFunction one_like(const EllipticFunction& a) { return a.curve().constant(a.field().one()); }
    static EllipticFunction scale(const EllipticFunction& a, long long n) { return a.field().from_int(n) * a; }
    static bool same_ring(const EllipticFunction& a, const EllipticFunction& b) { return a.curve_ptr() == b.curve_ptr(); }
    static constexpr bool characteristic_zero = false;
};

}  // namespace aswsum

#endif  // ASWSUM_ELLIPTIC_HPP
