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

#ifndef ASWSUM_BOUNDS_HPP
#define ASWSUM_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charsum.hpp"

namespace aswsum {

/// (max_i p^{l-1-i} deg f_i - 1) p^{m/2}; degs[i] < 0 for a zero component.
inline double bound_degree(unsigned p, unsigned l, unsigned m, const std::vector<long>& degs) {
    if (degs.size() > l) throw std::invalid_argument("more component degrees than the Witt length");
    long top = 0;
    for (std::size_t i = 0; i < degs.size(); ++i)
        if (degs[i] > 0) top = std::max(top, static_cast<long>(checked_pow(p, l - 1 - static_cast<unsigned>(i))) * degs[i]);
    if (top == 0) throw Degenerate("all components are constant");
    return static_cast<double>(top - 1) * std::pow(static_cast<double>(p), m / 2.0);
}

/// (2(g - 1) + deg D_chi) p^{m d / 2}.
template <class Curve, class Fn>
double bound_conductor(const Curve& C, const WittVector<Fn>& f, unsigned d) {
    if (!is_nondegenerate(C, f)) throw Degenerate("bound for a degenerate Witt vector");
    const FiniteField& k = C.constant_field();
    const long coeff = 2 * (static_cast<long>(C.genus()) - 1) + conductor(C, f).degree;
    return static_cast<double>(coeff) * std::pow(static_cast<double>(k.characteristic()), k.degree() * d / 2.0);
}

struct PoleInput {
    unsigned degree = 1;        // deg P_i
    std::vector<long> orders;   // n_{ij}, 0 <= j < l; a single entry n_i for the simplified bounds
    long v = 0;                 // multiplicity in D
    long v0 = 0;                // multiplicity in D_0
};

struct BoundInputs {
    unsigned p = 2, l = 2, m = 1;
    long g = 0;
    std::vector<PoleInput> poles;
};

struct ClosedFormBound {
    long coefficient = 0;  // the factor in front of p^{m/2}
    double value = 0;
};

namespace detail {

inline void check_inputs(const BoundInputs& in) {
    if (!is_prime(in.p)) throw std::invalid_argument("p must be prime");
    if (in.l < 1) throw std::invalid_argument("l must be positive");
    if (in.g < 0) throw std::invalid_argument("genus must be nonnegative");
    for (const auto& P : in.poles) {
        if (P.degree == 0 || P.v < 0 || P.v0 < 0) throw std::invalid_argument("pole data must be nonnegative with positive degree");
        for (long n : P.orders)
            if (n < 0) throw std::invalid_argument("pole orders must be nonnegative");
    }
}

inline long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

inline ClosedFormBound with_factor(const BoundInputs& in, long coefficient) {
    return {coefficient, static_cast<double>(coefficient) * std::pow(static_cast<double>(in.p), in.m / 2.0)};
}

inline long single_order(const PoleInput& P) {
    if (P.orders.empty()) throw std::invalid_argument("pole without an order");
    return *std::max_element(P.orders.begin(), P.orders.end());
}

}  // namespace detail

inline ClosedFormBound bound_pole_orders(const BoundInputs& in) {
    detail::check_inputs(in);
    const long p = in.p;
    const unsigned l = in.l;
    long total = 2 * in.g - 2;
    for (const auto& P : in.poles) {
        if (P.orders.size() != l) throw std::invalid_argument("need one pole order per Witt coordinate");
        long A = P.orders[l - 1];
        for (unsigned j = 0; j + 2 <= l; ++j) {
            const long n = P.orders[j];
            A = std::max(A, static_cast<long>(checked_pow(static_cast<std::uint64_t>(p), l - 1 - j)) * (n + 1 + P.v));
            A = std::max(A, static_cast<long>(checked_pow(static_cast<std::uint64_t>(p), l - 2 - j)) * (n + 1 + P.v0 + 2 * P.v));
        }
        total += (A + 1) * static_cast<long>(P.degree);
    }
    return detail::with_factor(in, total);
}

inline ClosedFormBound bound_length_two(const BoundInputs& in) {
    if (in.l != 2) throw PreconditionViolated("this bound is stated for l = 2");
    detail::check_inputs(in);
    const long p = in.p;
    long B = (2 * in.g - 2) * (p + 1) + p * detail::ceil_div(2 * in.g - 1, p);
    for (const auto& P : in.poles) B += (p * (detail::single_order(P) + 1) + 1) * static_cast<long>(P.degree);
    return detail::with_factor(in, B);
}

inline ClosedFormBound bound_odd_p(const BoundInputs& in) {
    if (in.p == 2) throw PreconditionViolated("this bound needs p odd");
    detail::check_inputs(in);
    const long p = in.p, q = static_cast<long>(checked_pow(in.p, in.l - 1));
    long B = (2 * in.g - 2) * (q + 1) + q * detail::ceil_div(2 * in.g - 1, p);
    for (const auto& P : in.poles) B += (q * (detail::single_order(P) + 1) + 1) * static_cast<long>(P.degree);
    return detail::with_factor(in, B);
}

struct BoundReport {
    std::string instance;
    std::string bound_name;
    double measured = 0;
    double bound = 0;
    double ratio = 0;
    bool pass = false;
    std::optional<CyclotomicInteger> exact;
};

inline BoundReport make_report(std::string instance, std::string name, const CyclotomicInteger& S, double bound) {
    BoundReport r;
    r.instance = std::move(instance);
    r.bound_name = std::move(name);
    r.exact = S;
    r.measured = static_cast<double>(S.abs());
    r.bound = bound;
    r.ratio = bound > 0 ? r.measured / bound : (r.measured > kBoundSlack ? INFINITY : 0.0);
    r.pass = r.measured <= bound + kBoundSlack;
    return r;
}

struct SweepSummary {
    std::size_t instances = 0;
    std::size_t violations = 0;
    double max_ratio = 0;
};

inline SweepSummary summarize(const std::vector<BoundReport>& reports) {
    SweepSummary s;
    s.instances = reports.size();
    for (const auto& r : reports) {
        if (!r.pass) ++s.violations;
        s.max_ratio = std::max(s.max_ratio, r.ratio);
    }
    return s;
}

struct DegreeFamily {
    unsigned p = 2, l = 2, m = 1;
    std::vector<unsigned> max_degrees;   // per component f_i
    std::optional<std::size_t> sample;   // random draws instead of exhaustive enumeration
    std::uint64_t seed = 0;
};

/*
   f = f_0 + p f_1 + ... with Teichmuller coefficients in each f_i, against the bound from the
   actual component degrees. Instances where every component is constant are skipped.
*/
inline std::vector<BoundReport> verify_sweep(const DegreeFamily& fam) {
    const GaloisRing& R = GaloisRing::get(fam.p, fam.l, fam.m);
    const FiniteField& k = R.residue_field();
    const std::size_t comps = fam.max_degrees.size();
    if (comps == 0) return {};
    if (comps > fam.l) throw std::invalid_argument("more components than the Witt length");
    std::size_t slots = 0;
    for (unsigned d : fam.max_degrees) slots += d + 1;
    const std::uint64_t q = k.order();
    const std::vector<GrElement> teich = R.teichmuller_set();
    std::vector<GrElement> ppow{R.one()};
    for (std::size_t i = 1; i < comps; ++i) ppow.push_back(ppow.back() * R.from_int(fam.p));

    std::vector<BoundReport> out;
    auto run = [&](const std::vector<std::uint64_t>& digits) {
        GrPolynomial f;
        std::vector<long> degs(comps, -1);
        std::size_t pos = 0;
        std::string name;
        for (std::size_t i = 0; i < comps; ++i) {
            std::string part;
            for (unsigned j = 0; j <= fam.max_degrees[i]; ++j, ++pos) {
                const std::uint64_t a = digits[pos];
                if (f.size() <= j) f.resize(j + 1, R.zero());
                f[j] = f[j] + ppow[i] * teich[a];
                if (a) degs[i] = j;
                part += (j ? "," : "") + std::to_string(a);
            }
            name += (i ? ";" : "") + part;
        }
        long top = 0;
        for (std::size_t i = 0; i < comps; ++i)
            if (degs[i] > 0) top = std::max(top, degs[i]);
        if (top == 0) return;
        const auto S = sum_teichmuller(R, f);
        out.push_back(make_report("[" + name + "]", "degree", S.value, bound_degree(fam.p, fam.l, fam.m, degs)));
    };
    std::vector<std::uint64_t> digits(slots, 0);
    if (fam.sample) {
        std::mt19937_64 rng(fam.seed);
        for (std::size_t s = 0; s < *fam.sample; ++s) {
            for (auto& v : digits) v = rng() % q;
            run(digits);
        }
        return out;
    }
    if (checked_pow(q, static_cast<unsigned>(slots)) > kEnumerationCap) throw CapExceeded("exhaustive sweep exceeds the cap");
    for (;;) {
        run(digits);
        std::size_t i = 0;
        while (i < slots && ++digits[i] == q) digits[i++] = 0;
        if (i == slots) break;
    }
    return out;
}

/// Conductor bound over each instance and each d in [1, dmax]; degenerate instances are skipped.
template <class Curve, class Fn>
std::vector<BoundReport> verify_sweep(const Curve& C, const std::vector<std::pair<std::string, WittVector<Fn>>>& family, unsigned dmax) {
    std::vector<BoundReport> out;
    for (const auto& [name, f] : family) {
        if (!is_nondegenerate(C, f)) continue;
        for (unsigned d = 1; d <= dmax; ++d) {
            const auto S = sum_witt(C, f, d);
            out.push_back(make_report(name + " d=" + std::to_string(d), "conductor", S.value, bound_conductor(C, f, d)));
        }
    }
    return out;
}

}  // namespace aswsum

#endif  // ASWSUM_BOUNDS_HPP
