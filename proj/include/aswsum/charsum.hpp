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

#ifndef ASWSUM_CHARSUM_HPP
#define ASWSUM_CHARSUM_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "conductor.hpp"
#include "cyclotomic.hpp"
#include "galois_ring.hpp"

namespace aswsum {

struct CharSumResult {
    CyclotomicInteger value;
    long double modulus = 0;
    std::uint64_t terms = 0;
    std::vector<Place> excluded;
};

/// Polynomial over GR(p^l, m), coefficients from degree 0 up.
using GrPolynomial = std::vector<GrElement>;

inline GrElement evaluate(const GrPolynomial& f, const GrElement& x) {
    GrElement acc = x.ring().zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

/// Coefficients by their Witt digits, T by (T, 0, ..., 0).
inline WittVector<FieldPoly> gamma_s(const GaloisRing& R, const GrPolynomial& f) {
    const FiniteField& k = R.residue_field();
    const WittParams params = R.witt_params();
    const FieldPoly zero(k);
    auto constant = [&](const GrElement& c) {
        std::vector<FieldPoly> v;
        const WittVector<Gf> w = R.to_witt(c);
        for (const Gf& a : w.coords()) v.push_back(FieldPoly::constant(a));
        return WittVector<FieldPoly>(params, v);
    };
    const auto T = WittVector<FieldPoly>::teichmuller(params, FieldPoly::x(k));
    WittVector<FieldPoly> acc = WittVector<FieldPoly>::zero(params, zero);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * T + constant(f[i]);
    return acc;
}

inline WittVector<RationalFunction> to_rational(const WittVector<FieldPoly>& f) {
    std::vector<RationalFunction> c;
    for (const FieldPoly& g : f.coords()) c.emplace_back(g);
    return WittVector<RationalFunction>(f.params(), c);
}

/// sum over the Teichmuller set of psi_b(f(x)).
inline CharSumResult sum_teichmuller(const GaloisRing& R, const GrPolynomial& f, const std::optional<GrElement>& b = {}) {
    if (R.residue_field().order() > kEnumerationCap) throw CapExceeded("Teichmuller set of " + R.name() + " exceeds the cap");
    const GrElement twist = b ? *b : R.one();
    std::vector<std::uint64_t> hist(R.modulus_integer(), 0);
    for (const GrElement& x : R.teichmuller_set()) {
        const GrElement y = f.empty() ? R.zero() : evaluate(f, x);
        ++hist[R.absolute_trace(twist * y)];
    }
    CharSumResult r;
    r.value = CyclotomicInteger::from_histogram(R.characteristic(), R.length(), hist);
    r.modulus = r.value.abs();
    r.terms = R.residue_field().order();
    return r;
}

namespace detail {

/*
   Tr([a]) in Z/p^l for every a in F, by index. With g primitive, s_k = Tr([g]^k) satisfies the
   linear recurrence given by the minimal relation of [g] over Z/p^l, so the table costs
   O(|F| deg F) small-integer operations.
*/
inline const std::vector<std::uint16_t>& teichmuller_trace_table(const FiniteField& F, unsigned l) {
    static std::mutex mutex;
    static std::map<std::pair<const FiniteField*, unsigned>, std::unique_ptr<std::vector<std::uint16_t>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{&F, l}];
    if (slot) return *slot;
    if (F.order() > kEnumerationCap) throw CapExceeded("trace table for " + F.name() + " exceeds the cap");
    const GaloisRing& R = GaloisRing::get(F, l);
    const std::uint64_t n = R.modulus_integer(), Q = F.order();
    const unsigned N = F.degree();
    const GrElement G = R.teichmuller(F.primitive_element());
    std::vector<GrElement> pw{R.one()};
    for (unsigned j = 1; j <= N; ++j) pw.push_back(pw.back() * G);
    // solve sum_j c_j pw[j] = pw[N], j < N; pivots are units mod p
    std::vector<std::vector<std::uint64_t>> A(N, std::vector<std::uint64_t>(N + 1));
    for (unsigned r = 0; r < N; ++r) {
        for (unsigned j = 0; j < N; ++j) A[r][j] = pw[j].coeffs()[r];
        A[r][N] = pw[N].coeffs()[r];
    }
    const unsigned p = F.characteristic();
    for (unsigned col = 0; col < N; ++col) {
        unsigned piv = col;
        while (piv < N && A[piv][col] % p == 0) ++piv;
        if (piv == N) throw InternalError("Teichmuller lift of a primitive element does not generate " + R.name());
        std::swap(A[piv], A[col]);
        const std::uint64_t inv = invmod_prime_power(A[col][col], n);
        for (auto& v : A[col]) v = mulmod(v, inv, n);
        for (unsigned r = 0; r < N; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const std::uint64_t f = A[r][col];
            for (unsigned j = 0; j <= N; ++j) A[r][j] = (A[r][j] + n - mulmod(f, A[col][j], n)) % n;
        }
    }
    std::vector<std::uint64_t> c(N);
    for (unsigned j = 0; j < N; ++j) c[j] = A[j][N];
    auto table = std::make_unique<std::vector<std::uint16_t>>(Q, 0);
    std::vector<std::uint64_t> window(N);
    for (unsigned j = 0; j < N; ++j) window[j] = R.absolute_trace(pw[j]);
    for (std::uint64_t k = 0; k + 1 < Q; ++k) {
        const std::uint64_t s = window[k % N];
        (*table)[F.exp(k)] = static_cast<std::uint16_t>(s);
        std::uint64_t next = 0;
        for (unsigned j = 0; j < N; ++j) next = (next + c[j] * window[(k + j) % N]) % n;
        window[k % N] = next;
    }
    slot = std::move(table);
    return *slot;
}

inline std::vector<std::uint64_t> raw_coeffs(const FieldPoly& f) {
    std::vector<std::uint64_t> c;
    for (const Gf& a : f.coeffs()) c.push_back(a.index());
    return c;
}

inline std::uint64_t horner(const FiniteField& F, const std::vector<std::uint64_t>& c, std::uint64_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
    return acc;
}

// Orbit size of x under x -> x^q, or 0 when x is not the smallest index of its orbit.
inline unsigned orbit_if_minimal(const FiniteField& F, std::uint64_t x, std::uint64_t q) {
    if (x == 0) return 1;
    const std::uint64_t n = F.order() - 1;
    const std::uint64_t lx = F.log(x);
    std::uint64_t l = mulmod(lx, q % n, n);
    unsigned e = 1;
    while (l != lx) {
        if (F.exp(l) < x) return 0;
        l = mulmod(l, q % n, n);
        ++e;
    }
    return e;
}

// Runs body(lo, hi, hist) on slices of [0, total) and merges the histograms.
template <class Body>
std::vector<std::uint64_t> parallel_histogram(std::uint64_t total, std::size_t bins, Body body) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total / 4096 + 1));
    std::vector<std::vector<std::uint64_t>> parts(workers, std::vector<std::uint64_t>(bins, 0));
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            body(total * w / workers, total * (w + 1) / workers, parts[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<std::uint64_t> hist(bins, 0);
    for (auto& part : parts)
        for (std::size_t i = 0; i < bins; ++i) hist[i] += part[i];
    return hist;
}

inline WittVector<Gf> map_witt(const WittVector<Gf>& w, const FieldEmbedding& e) {
    std::vector<Gf> c;
    for (const Gf& a : w.coords()) c.push_back(e.map(a));
    return WittVector<Gf>(w.params(), c);
}

// Chart of P^1: the affine line minus the zeros of the denominators.
struct P1Chart {
    std::vector<std::vector<std::uint64_t>> num, den;
    P1Chart(const WittVector<RationalFunction>& f, const FieldEmbedding& e) {
        for (const auto& c : f.coords()) {
            num.push_back(raw_coeffs(e.map(c.numerator())));
            den.push_back(raw_coeffs(e.map(c.denominator())));
        }
    }
};

inline std::vector<Place> off_chart_places(const ProjectiveLine& L, const WittVector<RationalFunction>& f) {
    std::vector<Place> out{L.infinity()};
    for (const auto& c : f.coords())
        if (c.denominator().degree() > 0)
            for (auto& [g, e] : factor(c.denominator())) {
                Place P = L.finite(g);
                if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
            }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Place> off_chart_places(const EllipticCurve& E, const WittVector<EllipticFunction>&) { return {E.origin()}; }

// Witt values at the chart points over F, one call per Frobenius orbit with its size as weight.
template <class Visit>
void chart_orbits(const ProjectiveLine& L, const WittVector<RationalFunction>& f, const FiniteField& F, std::uint64_t lo,
                  std::uint64_t hi, Visit visit) {
    const P1Chart chart(f, FieldEmbedding::get(L.constant_field(), F));
    const unsigned l = f.length();
    const std::uint64_t q = L.constant_field().order();
    std::vector<std::uint64_t> a(l);
    for (std::uint64_t x = lo; x < hi; ++x) {
        const unsigned e = orbit_if_minimal(F, x, q);
        if (!e) continue;
        bool regular = true;
        for (unsigned i = 0; i < l && regular; ++i) {
            const std::uint64_t d = horner(F, chart.den[i], x);
            if (d == 0) regular = false;
            else a[i] = F.mul(horner(F, chart.num[i], x), F.inv(d));
        }
        if (regular) visit(a, e);
    }
}

template <class Visit>
void chart_orbits(const EllipticCurve& E, const WittVector<EllipticFunction>& f, const FiniteField& F, std::uint64_t lo,
                  std::uint64_t hi, Visit visit) {
    const auto& emb = FieldEmbedding::get(E.constant_field(), F);
    const unsigned l = f.length();
    std::vector<std::vector<std::uint64_t>> u, v;
    for (const auto& c : f.coords()) {
        u.push_back(raw_coeffs(emb.map(c.u())));
        v.push_back(raw_coeffs(emb.map(c.v())));
    }
    const auto h = raw_coeffs(emb.map(E.h())), g = raw_coeffs(emb.map(E.g()));
    const std::uint64_t q = E.constant_field().order();
    std::vector<std::uint64_t> a(l);
    for (std::uint64_t x = lo; x < hi; ++x) {
        const unsigned e = orbit_if_minimal(F, x, q);
        if (!e) continue;
        Gf ys[2];
        const Gf gx(F, x);
        const int n = E.solve_y(gx, Gf(F, horner(F, h, x)), Gf(F, horner(F, g, x)), ys);
        for (int j = 0; j < n; ++j) {
            for (unsigned i = 0; i < l; ++i)
                a[i] = F.add(horner(F, u[i], x), F.mul(horner(F, v[i], x), ys[j].index()));
            visit(a, e);
        }
    }
}

// Contribution of an off-chart place: its value in W_l(k_P), or nullopt when excluded.
template <class Curve, class Fn>
std::optional<WittVector<Gf>> off_chart_value(const Curve& C, const WittVector<Fn>& f, const Place& P,
                                              const std::vector<Place>& exclusions) {
    if (std::find(exclusions.begin(), exclusions.end(), P) != exclusions.end()) return std::nullopt;
    const ReducedForm R = artin_reduce_at(C, f, P);
    const long rp = reduced_pole_order(R);
    if (rp > 0)
        throw PreconditionViolated("sum meets the pole " + P.to_string() + " (rp = " + std::to_string(rp) +
                                   ") that is not excluded");
    return residue_value(R);
}

}  // namespace detail

/*
   sum over P in C(F_{q^d}) outside the exclusions of psi_b(Tr f(P)). Chart points are evaluated
   directly, one per Frobenius orbit; off-chart places contribute through their Artin-reduced
   representative. Exclusions default to the pole support.
*/
template <class Curve, class Fn>
CharSumResult sum_witt(const Curve& C, const WittVector<Fn>& f, unsigned d,
                       std::optional<std::vector<Place>> exclusions = {}, const std::optional<GrElement>& b = {}) {
    const FiniteField& k = C.constant_field();
    const unsigned p = k.characteristic(), l = f.length();
    if (d == 0) throw std::invalid_argument("extension degree must be positive");
    const std::uint64_t Q = checked_pow(k.order(), d);
    if (Q > kEnumerationCap) throw CapExceeded("sum over " + std::to_string(Q) + " points exceeds the cap");
    const FiniteField& F = FiniteField::get(p, k.degree() * d);
    const std::vector<Place> excl = exclusions ? *exclusions : pole_support(C, f);
    const GaloisRing& Rk = GaloisRing::get(k, l);
    const bool twisted = b && !(*b == Rk.one());
    const auto& T = detail::teichmuller_trace_table(F, l);
    const std::uint64_t n = checked_pow(p, l);
    std::optional<WittVector<Gf>> bw;
    if (twisted) bw = detail::map_witt(Rk.to_witt(*b), FieldEmbedding::get(k, F));

    auto hist = detail::parallel_histogram(Q, n, [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& h) {
        detail::chart_orbits(C, f, F, lo, hi, [&](const std::vector<std::uint64_t>& a, unsigned e) {
            std::uint64_t t = 0, pw = 1;
            if (twisted) {
                std::vector<Gf> c;
                for (auto v : a) c.emplace_back(F, v);
                const auto w = *bw * WittVector<Gf>(bw->params(), c);
                for (unsigned i = 0; i < l; ++i, pw *= p) t += pw * T[w[i].index()];
            } else {
                for (unsigned i = 0; i < l; ++i, pw *= p) t += pw * T[a[i]];
            }
            h[t % n] += e;
        });
    });

    CharSumResult r;
    for (const Place& P : detail::off_chart_places(C, f)) {
        if (d % P.degree != 0) continue;
        auto val = detail::off_chart_value(C, f, P, excl);
        if (!val) {
            r.excluded.push_back(P);
            continue;
        }
        const FiniteField& kp = P.residue_field();
        const GaloisRing& Rp = GaloisRing::get(kp, l);
        WittVector<Gf> w = *val;
        if (twisted) w = detail::map_witt(Rk.to_witt(*b), FieldEmbedding::get(k, kp)) * w;
        const std::uint64_t t = Rp.absolute_trace(Rp.from_witt(w));
        hist[(t * (d / P.degree)) % n] += P.degree;
    }
    for (const Place& P : excl)
        if (std::find(r.excluded.begin(), r.excluded.end(), P) == r.excluded.end() && d % P.degree == 0) r.excluded.push_back(P);
    std::sort(r.excluded.begin(), r.excluded.end());
    for (auto c : hist) r.terms += c;
    r.value = CyclotomicInteger::from_histogram(p, l, hist);
    r.modulus = r.value.abs();
    return r;
}

/// The same sum point by point through Galois-ring traces; slow, for cross-checking.
template <class Curve, class Fn>
CharSumResult sum_witt_reference(const Curve& C, const WittVector<Fn>& f, unsigned d,
                                 std::optional<std::vector<Place>> exclusions = {}, const std::optional<GrElement>& b = {}) {
    const FiniteField& k = C.constant_field();
    const unsigned p = k.characteristic(), l = f.length();
    const std::uint64_t Q = checked_pow(k.order(), d);
    if (Q > kEnumerationCap) throw CapExceeded("sum over " + std::to_string(Q) + " points exceeds the cap");
    const FiniteField& F = FiniteField::get(p, k.degree() * d);
    const auto& emb = FieldEmbedding::get(k, F);
    const std::vector<Place> excl = exclusions ? *exclusions : pole_support(C, f);
    const GaloisRing& Rk = GaloisRing::get(k, l);
    const GaloisRing& RF = GaloisRing::get(F, l);
    const GaloisRingExtension ext(Rk, RF);
    const GrElement twist = b ? ext.map(*b) : RF.one();
    std::vector<std::uint64_t> hist(checked_pow(p, l), 0);
    auto add_value = [&](const WittVector<Gf>& w) { ++hist[RF.absolute_trace(twist * RF.from_witt(w))]; };

    if constexpr (std::is_same_v<Fn, RationalFunction>) {
        std::vector<RationalFunction> mapped;
        for (const auto& c : f.coords()) mapped.push_back(c.map(emb));
        for (std::uint64_t i = 0; i < Q; ++i) {
            const Gf x = F.element(i);
            bool regular = true;
            std::vector<Gf> a;
            for (const auto& c : mapped) {
                if (c.denominator().evaluate(x).is_zero()) {
                    regular = false;
                    break;
                }
                a.push_back(c.evaluate(x));
            }
            if (regular) add_value(WittVector<Gf>(f.params(), a));
        }
    } else {
        for (auto& [x, y] : C.affine_points(d)) {
            std::vector<Gf> a;
            for (const auto& c : f.coords()) a.push_back(C.evaluate(c, x, y));
            add_value(WittVector<Gf>(f.params(), a));
        }
    }
    CharSumResult r;
    for (const Place& P : detail::off_chart_places(C, f)) {
        if (d % P.degree != 0) continue;
        auto val = detail::off_chart_value(C, f, P, excl);
        if (!val) {
            r.excluded.push_back(P);
            continue;
        }
        // the geometric points over P carry the conjugates of the value
        const auto& up = FieldEmbedding::get(P.residue_field(), F);
        WittVector<Gf> w = detail::map_witt(*val, up);
        for (unsigned j = 0; j < P.degree; ++j) {
            add_value(w);
            std::vector<Gf> c;
            for (const Gf& a : w.coords()) c.push_back(a.frobenius(k.degree()));
            w = WittVector<Gf>(w.params(), c);
        }
    }
    for (const Place& P : excl)
        if (std::find(r.excluded.begin(), r.excluded.end(), P) == r.excluded.end() && d % P.degree == 0) r.excluded.push_back(P);
    std::sort(r.excluded.begin(), r.excluded.end());
    for (auto c : hist) r.terms += c;
    r.value = CyclotomicInteger::from_histogram(p, l, hist);
    r.modulus = r.value.abs();
    return r;
}

/// Teichmuller sum of f against the Witt sum of gamma_s(f) over the affine line.
inline bool teichmuller_witt_check(const GaloisRing& R, const GrPolynomial& f) {
    const ProjectiveLine L(R.residue_field());
    const auto lhs = sum_teichmuller(R, f);
    const auto rhs = sum_witt(L, to_rational(gamma_s(R, f)), 1, std::vector<Place>{L.infinity()});
    return lhs.value == rhs.value;
}

struct LFunctionResult {
    std::vector<CyclotomicInteger> sums;          // S_1 .. S_N
    std::vector<CyclotomicInteger> coefficients;  // c_0 .. c_N
    long claimed_degree = 0;
    long conductor_degree = 0;
    bool degree_ok = false;                           // c_D != 0 and c_n = 0 for D < n <= N
    std::vector<std::complex<long double>> inverse_roots;
    std::vector<long double> root_moduli;
    long double expected_modulus = 0;
    bool rh_ok = false;
};

/// Power sums back from the coefficients: S_n = n c_n - sum_{d<n} S_d c_{n-d}.
inline std::vector<CyclotomicInteger> power_sums_from_coefficients(const std::vector<CyclotomicInteger>& c, std::size_t N) {
    std::vector<CyclotomicInteger> S;
    for (std::size_t n = 1; n <= N; ++n) {
        CyclotomicInteger s = BigInt(static_cast<long long>(n)) * (n < c.size() ? c[n] : CyclotomicInteger(c[0].p(), c[0].l()));
        for (std::size_t d = 1; d < n; ++d) s = s - S[d - 1] * (n - d < c.size() ? c[n - d] : CyclotomicInteger(c[0].p(), c[0].l()));
        S.push_back(s);
    }
    return S;
}

/// Roots of z^D + c_1 z^{D-1} + ... + c_D, i.e. the inverse roots of 1 + c_1 T + ... + c_D T^D.
inline std::vector<std::complex<long double>> inverse_roots(const std::vector<std::complex<long double>>& c) {
    const std::size_t D = c.size() - 1;
    if (D == 0) return {};
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<long>(D), static_cast<long>(D));
    for (std::size_t j = 0; j < D; ++j) M(0, static_cast<long>(j)) = std::complex<double>(-c[j + 1]);
    for (std::size_t i = 1; i < D; ++i) M(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
    std::vector<std::complex<long double>> roots;
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        std::complex<long double> z(es.eigenvalues()[i]);
        for (int it = 0; it < 8; ++it) {
            std::complex<long double> v = 1, dv = 0;
            for (std::size_t j = 1; j <= D; ++j) {
                dv = dv * z + v;
                v = v * z + c[j];
            }
            if (std::abs(dv) < 1e-300L) break;
            z -= v / dv;
        }
        roots.push_back(z);
    }
    return roots;
}

/// L-polynomial from S_1..S_N by Newton's identities over Q(zeta).
template <class Curve, class Fn>
LFunctionResult l_function(const Curve& C, const WittVector<Fn>& f, unsigned N) {
    if (!is_nondegenerate(C, f)) throw Degenerate("L-function of a degenerate Witt vector");
    const FiniteField& k = C.constant_field();
    const unsigned p = k.characteristic(), l = f.length();
    LFunctionResult r;
    r.conductor_degree = conductor(C, f).degree;
    r.claimed_degree = r.conductor_degree + 2 * static_cast<long>(C.genus()) - 2;
    if (static_cast<long>(N) < r.claimed_degree + 2)
        throw std::invalid_argument("need at least " + std::to_string(r.claimed_degree + 2) + " terms to witness the degree");
    r.coefficients.push_back(CyclotomicInteger::from_int(p, l, 1));
    for (unsigned d = 1; d <= N; ++d) {
        r.sums.push_back(sum_witt(C, f, d).value);
        CyclotomicRational acc(CyclotomicInteger(p, l));
        for (unsigned j = 1; j <= d; ++j) acc = acc + CyclotomicRational(r.sums[j - 1] * r.coefficients[d - j]);
        const CyclotomicRational cn = acc.divided(BigInt(d));
        if (!cn.is_integral()) throw InternalError("non-integral L-function coefficient c_" + std::to_string(d));
        r.coefficients.push_back(cn.numerator());
    }
    const long D = r.claimed_degree;
    r.degree_ok = D >= 0 && (D == 0 || !r.coefficients[static_cast<std::size_t>(D)].is_zero());
    for (std::size_t n = static_cast<std::size_t>(std::max(D, 0L)) + 1; n <= N; ++n)
        if (!r.coefficients[n].is_zero()) r.degree_ok = false;
    r.expected_modulus = std::sqrt(static_cast<long double>(k.order()));
    if (D >= 0) {
        std::vector<std::complex<long double>> c;
        for (long n = 0; n <= D; ++n) c.push_back(r.coefficients[static_cast<std::size_t>(n)].to_complex());
        r.inverse_roots = inverse_roots(c);
    }
    r.rh_ok = r.degree_ok;
    for (const auto& z : r.inverse_roots) {
        const long double m = std::abs(z);
        r.root_moduli.push_back(m);
        if (std::abs(m - r.expected_modulus) > 1e-6L * r.expected_modulus) r.rh_ok = false;
    }
    return r;
}

}  // namespace aswsum

#endif  // ASWSUM_CHARSUM_HPP
