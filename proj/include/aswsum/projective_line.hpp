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

#ifndef ASWSUM_PROJECTIVE_LINE_HPP
#define ASWSUM_PROJECTIVE_LINE_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "laurent.hpp"
#include "place.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace aswsum {

/*
   The function field k(x) of P^1. Local parameters: the irreducible polynomial itself at a
   finite place, 1/x at infinity. At a finite place of degree e the completion is
   k_P((t)) with k_P = F_{q^e}; x expands as the series X(t) with pi(X(t)) = t, X(0) = root.
*/
class ProjectiveLine {
   public:
    using function_type = RationalFunction;

    explicit ProjectiveLine(const FiniteField& k) : k_(&k) {}

    const FiniteField& constant_field() const { return *k_; }
    static constexpr unsigned genus() { return 0; }
    std::string name() const { return "P1/" + k_->name(); }

    RationalFunction x() const { return RationalFunction::x(*k_); }
    RationalFunction constant(const Gf& c) const { return RationalFunction::constant(c); }

    Place infinity() const {
        Place P;
        P.kind = Place::Kind::Infinity;
        P.residue = k_;
        return P;
    }

    Place finite(const FieldPoly& pi) const {
        if (pi.field_ptr() != k_) throw std::invalid_argument("place polynomial over the wrong field");
        const FieldPoly g = pi.monic();
        if (!is_irreducible(g)) throw std::invalid_argument("place polynomial " + g.to_string() + " is not irreducible");
        Place P;
        P.kind = Place::Kind::Finite;
        P.poly = g;
        P.degree = static_cast<unsigned>(g.degree());
        if (P.degree == 1) {
            P.residue = k_;
            P.root = -g.coeff(0);
        } else {
            P.residue = &FiniteField::get(k_->characteristic(), k_->degree() * P.degree);
            const auto& emb = FieldEmbedding::get(*k_, *P.residue);
            P.root = roots(emb.map(g)).front();
        }
        return P;
    }

    /// The rational place x = c.
    Place point(const Gf& c) const { return finite(FieldPoly(*k_, {-c, k_->one()})); }

    long valuation(const RationalFunction& f, const Place& P) const {
        if (f.is_zero()) return kInfiniteValuation;
        if (P.kind == Place::Kind::Infinity) return static_cast<long>(f.denominator().degree()) - f.numerator().degree();
        if (P.kind != Place::Kind::Finite) throw std::invalid_argument("not a place of P^1");
        return multiplicity(f.numerator(), P.poly) - multiplicity(f.denominator(), P.poly);
    }

    /// Expansion of f at P in the local parameter, with rel terms after the leading one.
    LaurentSeries laurent(const RationalFunction& f, const Place& P, long rel) const {
        const FiniteField& kp = *P.residue;
        if (f.is_zero()) return LaurentSeries(kp);
        if (P.kind == Place::Kind::Infinity) {
            // f = t^{deg den - deg num} rev(num)(t) / rev(den)(t)
            const long v = valuation(f, P);
            LaurentSeries n = LaurentSeries::from_polynomial(reversed(f.numerator()));
            LaurentSeries d = LaurentSeries::from_polynomial(reversed(f.denominator()));
            if (d.is_exact() && d.coeffs().size() == 1) return (n * d.inverse(rel)).shifted(v);
            return (n * d.inverse(rel)).truncated(rel).shifted(v);
        }
        if (P.kind != Place::Kind::Finite) throw std::invalid_argument("not a place of P^1");
        FieldPoly num = f.numerator(), den = f.denominator();
        long v = 0;
        while ((num % P.poly).is_zero()) {
            num = num / P.poly;
            ++v;
        }
        while ((den % P.poly).is_zero()) {
            den = den / P.poly;
            --v;
        }
        const LaurentSeries X = expansion_of_x(P, rel);
        const auto& emb = FieldEmbedding::get(*k_, kp);
        LaurentSeries n = LaurentSeries::compose(emb.map(num), X);
        LaurentSeries d = LaurentSeries::compose(emb.map(den), X);
        if (n.is_exact() && d.is_exact() && d.coeffs().size() == 1) return (n * d.inverse(rel)).shifted(v);
        return (n * d.inverse(rel)).truncated(rel).shifted(v);
    }

    /// The series X(t) of x at a finite place, to absolute precision prec.
    LaurentSeries expansion_of_x(const Place& P, long prec) const {
        const FiniteField& kp = *P.residue;
        if (P.degree == 1) return LaurentSeries(kp, 0, {P.root, kp.one()}, LaurentSeries::kExact);
        const auto& emb = FieldEmbedding::get(*k_, kp);
        const FieldPoly pi = emb.map(P.poly), dpi = pi.derivative();
        const LaurentSeries t = LaurentSeries::monomial(kp.one(), 1);
        LaurentSeries X(kp, 0, {P.root}, 1);
        for (long have = 1; have < prec;) {
            have = std::min(2 * have, prec);
            LaurentSeries Xh = X.truncated(have);
            Xh = LaurentSeries(kp, Xh.start(), Xh.coeffs(), have);
            LaurentSeries F = LaurentSeries::compose(pi, Xh) - t;
            LaurentSeries D = LaurentSeries::compose(dpi, Xh);
            X = (Xh - F * D.inverse(have)).truncated(have);
        }
        return X;
    }

    /// The polynomial h over k of degree < deg P whose residue at P is c.
    FieldPoly lift_residue(const Place& P, const Gf& c) const {
        if (P.kind == Place::Kind::Infinity || P.degree == 1) return FieldPoly::constant(c);
        const FiniteField& kp = *P.residue;
        const auto& emb = FieldEmbedding::get(*k_, kp);
        std::vector<Gf> basis;
        const unsigned m = k_->degree();
        Gf ai = kp.one();
        for (unsigned i = 0; i < P.degree; ++i, ai *= P.root) {
            Gf bj = k_->one();
            for (unsigned j = 0; j < m; ++j, bj *= k_->generator()) basis.push_back(emb.map(m == 1 ? k_->one() : bj) * ai);
        }
        auto sol = solve_fp_coordinates(kp, basis, c);
        if (!sol) throw InternalError("residue not in the span of the power basis");
        std::vector<Gf> h;
        for (unsigned i = 0; i < P.degree; ++i) {
            std::vector<std::uint64_t> d(m);
            for (unsigned j = 0; j < m; ++j) d[j] = (*sol)[i * m + j];
            h.push_back(k_->from_digits(d));
        }
        return FieldPoly(*k_, std::move(h));
    }

    /// The local parameter as a global function.
    RationalFunction uniformizer(const Place& P) const {
        if (P.kind == Place::Kind::Infinity) return x().inverse();
        return RationalFunction(P.poly);
    }

    std::vector<std::pair<Place, long>> pole_divisor(const RationalFunction& f) const {
        std::vector<std::pair<Place, long>> out;
        if (f.is_zero()) return out;
        const long vinf = valuation(f, infinity());
        if (vinf < 0) out.emplace_back(infinity(), -vinf);
        if (f.denominator().degree() > 0)
            for (auto& [g, e] : factor(f.denominator())) out.emplace_back(finite(g), static_cast<long>(e));
        return out;
    }

    std::vector<std::pair<Place, long>> zero_divisor(const RationalFunction& f) const {
        if (f.is_zero()) throw std::domain_error("zero divisor of the zero function");
        return pole_divisor(f.inverse());
    }

    /// Monic irreducibles of degree <= dmax and infinity.
    std::vector<Place> places_up_to_degree(unsigned dmax) const {
        if (checked_pow(k_->order(), dmax) > kEnumerationCap) throw CapExceeded("place enumeration exceeds the cap");
        std::vector<Place> out;
        out.push_back(infinity());
        for (unsigned d = 1; d <= dmax; ++d)
            for (auto& g : monic_irreducibles(*k_, d)) out.push_back(finite(g));
        return out;
    }

    /// #P^1(F_{q^d}).
    std::uint64_t point_count(unsigned d) const { return checked_pow(k_->order(), d) + 1; }

   private:
    static long multiplicity(FieldPoly f, const FieldPoly& pi) {
        long v = 0;
        while (!f.is_zero() && (f % pi).is_zero()) {
            f = f / pi;
            ++v;
        }
        return v;
    }

    static FieldPoly reversed(const FieldPoly& f) {
        std::vector<Gf> c(f.coeffs().rbegin(), f.coeffs().rend());
        return FieldPoly(f.field(), std::move(c));
    }

    const FiniteField* k_;
};

}  // namespace aswsum

#endif  // ASWSUM_PROJECTIVE_LINE_HPP
