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

#ifndef ASWSUM_CONDUCTOR_HPP
#define ASWSUM_CONDUCTOR_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elliptic.hpp"
#include "errors.hpp"
#include "galois_ring.hpp"
#include "laurent.hpp"
#include "projective_line.hpp"
#include "witt.hpp"

namespace aswsum {

/// (F - 1) f.
template <class R>
WittVector<R> wp(const WittVector<R>& f) {
    return frobenius(f) - f;
}

/*
   Result of Artin's descent at one place, carried out on Laurent expansions over the residue
   field: original = reduced + wp(witness) coordinatewise as series in the local parameter.
*/
struct ReducedForm {
    Place place;
    WittVector<LaurentSeries> reduced;
    WittVector<LaurentSeries> witness;
    long precision;  // relative precision the expansions were taken at
};

struct Conductor {
    std::vector<std::pair<Place, long>> entries;  // place, rp + 1
    long degree = 0;
};

namespace detail {

inline constexpr long kMaxReductionPrecision = 1L << 16;

template <class Curve, class Fn>
long max_pole_order(const Curve& C, const WittVector<Fn>& f, const Place& P) {
    long n = 1;
    for (const Fn& c : f.coords()) {
        const long v = C.valuation(c, P);
        if (v < 0) n = std::max(n, -v);
    }
    return n;
}

// One pass of the descent at a fixed precision; throws PrecisionExhausted if it was not enough.
template <class Curve, class Fn>
ReducedForm reduce_at_precision(const Curve& C, const WittVector<Fn>& f, const Place& P, long rel) {
    const WittParams wp_ = f.params();
    const unsigned p = wp_.p, l = wp_.l;
    const FiniteField& kp = P.residue_field();
    std::vector<LaurentSeries> coords;
    for (const Fn& c : f.coords()) coords.push_back(c.is_zero() ? LaurentSeries(kp) : C.laurent(c, P, rel));
    WittVector<LaurentSeries> F(wp_, coords);
    WittVector<LaurentSeries> witness = WittVector<LaurentSeries>::zero(wp_, LaurentSeries(kp));
    for (unsigned i = 0; i < l; ++i) {
        for (;;) {
            const LaurentSeries& fi = F[i];
            if (fi.is_zero()) {
                if (fi.precision() <= 0) throw PrecisionExhausted("coordinate lost all precision");
                break;
            }
            const long v = fi.valuation();
            if (v >= 0 || (-v) % static_cast<long>(p) != 0) break;
            const long s = -v / static_cast<long>(p);
            const Gf c = fi.leading().pth_root();
            std::vector<LaurentSeries> g(l, LaurentSeries(kp));
            g[i] = LaurentSeries::monomial(c, -s);
            WittVector<LaurentSeries> gv(wp_, g);
            F = F - wp(gv);
            witness = witness + gv;
        }
    }
    for (const LaurentSeries& c : F.coords())
        if (c.is_zero() && c.precision() < 1) throw PrecisionExhausted("reduced coordinate known only below order 1");
    return ReducedForm{P, F, witness, rel};
}

}  // namespace detail

/// Artin reduction of f at P; precision grows by doubling until the result is determined.
template <class Curve, class Fn>
ReducedForm artin_reduce_at(const Curve& C, const WittVector<Fn>& f, const Place& P) {
    const long p = f.params().p, l = f.params().l;
    long rel = l * detail::max_pole_order(C, f, P) * static_cast<long>(checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(l))) + 8;
    rel = std::min(rel, detail::kMaxReductionPrecision);
    for (;;) {
        try {
            return detail::reduce_at_precision(C, f, P, rel);
        } catch (const PrecisionExhausted&) {
            if (rel >= detail::kMaxReductionPrecision) throw;
            rel = std::min(2 * rel, detail::kMaxReductionPrecision);
        }
    }
}

/// Value of a pole-free reduced form at its place, in W_l(k_P).
inline std::optional<WittVector<Gf>> residue_value(const ReducedForm& R) {
    std::vector<Gf> c;
    for (const LaurentSeries& s : R.reduced.coords()) {
        if (!s.is_zero() && s.valuation() < 0) return std::nullopt;
        c.push_back(s.is_zero() ? R.place.residue_field().zero() : s.coeff(0));
    }
    return WittVector<Gf>(R.reduced.params(), std::move(c));
}

inline long reduced_pole_order(const ReducedForm& R) {
    const unsigned p = R.reduced.params().p, l = R.reduced.params().l;
    long rp = 0;
    bool pole = false;
    for (unsigned i = 0; i < l; ++i) {
        const LaurentSeries& s = R.reduced[i];
        if (s.is_zero()) continue;
        const long v = s.valuation();
        if (v < 0) {
            pole = true;
            rp = std::max(rp, -static_cast<long>(checked_pow(p, l - 1 - i)) * v);
        }
    }
    if (pole) return rp;
    // pole-free: -1 exactly when the value is in wp W_l(k_P), i.e. has trace zero
    const auto value = residue_value(R);
    const GaloisRing& gr = GaloisRing::get(R.place.residue_field(), l);
    return gr.absolute_trace(gr.from_witt(*value)) == 0 ? -1 : 0;
}

template <class Curve, class Fn>
long reduced_pole_order(const Curve& C, const WittVector<Fn>& f, const Place& P) {
    return reduced_pole_order(artin_reduce_at(C, f, P));
}

/// Places where some coordinate has a pole.
template <class Curve, class Fn>
std::vector<Place> candidate_places(const Curve& C, const WittVector<Fn>& f) {
    std::vector<Place> out;
    for (const Fn& c : f.coords())
        for (auto& [P, n] : C.pole_divisor(c))
            if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
    std::sort(out.begin(), out.end());
    return out;
}

template <class Curve, class Fn>
Conductor conductor(const Curve& C, const WittVector<Fn>& f) {
    Conductor D;
    for (const Place& P : candidate_places(C, f)) {
        const long rp = reduced_pole_order(C, f, P);
        if (rp > 0) {
            D.entries.emplace_back(P, rp + 1);
            D.degree += (rp + 1) * static_cast<long>(P.degree);
        }
    }
    return D;
}

template <class Curve, class Fn>
std::vector<Place> pole_support(const Curve& C, const WittVector<Fn>& f) {
    std::vector<Place> out;
    for (auto& [P, n] : conductor(C, f).entries) out.push_back(P);
    return out;
}

/// f_0 minus wp_0 of global functions, until every pole order is prime to p.
inline RationalFunction reduce_first_coordinate(const ProjectiveLine& L, RationalFunction f) {
    const unsigned p = L.constant_field().characteristic();
    for (;;) {
        std::optional<std::pair<Place, long>> hit;
        for (auto& [P, n] : L.pole_divisor(f))
            if (n % p == 0) {
                hit.emplace(P, n);
                break;
            }
        if (!hit) return f;
        const auto& [P, n] = *hit;
        const unsigned s = static_cast<unsigned>(n / p);
        const Gf c = L.laurent(f, P, 1).leading().pth_root();
        RationalFunction h = P.kind == Place::Kind::Infinity
                                 ? RationalFunction(FieldPoly::monomial(c, s))
                                 : RationalFunction(L.lift_residue(P, c), P.poly.pow(s));
        f = f - (h.pow(p) - h);
    }
}

inline EllipticFunction reduce_first_coordinate(const EllipticCurve& E, EllipticFunction f) {
    const unsigned p = E.constant_field().characteristic();
    for (;;) {
        if (f.is_zero()) return f;
        const long v = E.valuation(f, E.origin());
        if (v >= 0 || (-v) % p != 0 || -v == static_cast<long>(p)) return f;
        const long s = -v / static_cast<long>(p);
        const Gf c = E.laurent(f, E.origin(), 1).leading().pth_root();
        const EllipticFunction h = c * E.pole_monomial(s);
        f = f - (h.pow(p) - h);
    }
}

/// f_0 is not in k + wp_0 K.
template <class Curve, class Fn>
bool is_nondegenerate(const Curve& C, const WittVector<Fn>& f) {
    return !reduce_first_coordinate(C, f[0]).is_constant();
}

/// Genus of K(wp^{-1} f) from the conductors of the multiples n f, 1 <= n < p^l.
template <class Curve, class Fn>
long genus_of_cover(const Curve& C, const WittVector<Fn>& f) {
    if (!is_nondegenerate(C, f)) throw Degenerate("genus of a degenerate Witt vector");
    const std::uint64_t q = checked_pow(f.params().p, f.params().l);
    long twice = 2 * static_cast<long>(q) * (static_cast<long>(C.genus()) - 1);
    WittVector<Fn> nf = f;
    for (std::uint64_t n = 1; n < q; ++n, nf = nf + f) twice += conductor(C, nf).degree;
    if (twice % 2 != 0 || twice < -2) throw InternalError("genus formula gave 2(g-1) = " + std::to_string(twice));
    return twice / 2 + 1;
}

}  // namespace aswsum

#endif  // ASWSUM_CONDUCTOR_HPP
