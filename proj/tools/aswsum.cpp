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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aswsum/aswsum.hpp"

using namespace aswsum;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitMath = 4;
constexpr int kExitViolations = 5;

struct Options {
    std::string out;
    std::string format = "json";
    std::string ring;
    std::string f;
    std::string f_witt;
    std::string curve;
    std::string twist;
    unsigned d = 1;
    unsigned terms = 0;
    std::vector<long> degs;
    unsigned p = 0, l = 2, m = 1;
    long g = 0;
    std::string poles;
    std::string over = "f2";
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    unsigned max_a = 5, max_b = 3, dmax = 1;
    std::string kind;
    std::string op;
    std::vector<std::string> operands;
};

struct Ring {
    unsigned p, l, m;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long to_long(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("bad " + what + ": \"" + s + "\"");
}

Ring parse_ring(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw ParseError("--ring takes p,l,m");
    Ring r{};
    r.p = static_cast<unsigned>(to_long(parts[0], "prime"));
    r.l = static_cast<unsigned>(to_long(parts[1], "length"));
    r.m = static_cast<unsigned>(to_long(parts[2], "degree"));
    if (!is_prime(r.p) || r.l == 0 || r.l > kMaxWittLength || r.m == 0) throw ParseError("--ring needs a prime p, 1 <= l <= 4, m >= 1");
    return r;
}

Json ring_json(const Ring& r) { return Json{{"p", r.p}, {"l", r.l}, {"m", r.m}}; }

Json integer_json(const BigInt& v) {
    if (v >= BigInt(-(1LL << 53)) && v <= BigInt(1LL << 53)) return Json(static_cast<long long>(v));
    return Json(v.str());
}

// exact coefficients on the power basis 1, zeta, ..., with the float value alongside
Json cyclotomic_json(const CyclotomicInteger& z) {
    Json c = Json::array();
    for (const auto& v : z.coeffs()) c.push_back(integer_json(v));
    const auto w = z.to_complex();
    // float noise below 1e-12 |z| printed as 0, so the exact zeros read as zeros
    const long double tiny = 1e-12L * std::max<long double>(1, z.abs());
    auto clean = [tiny](long double v) { return static_cast<double>(std::abs(v) < tiny ? 0 : v); };
    return Json{{"coeffs", c}, {"text", z.to_string()}, {"re", clean(w.real())}, {"im", clean(w.imag())},
                {"abs", static_cast<double>(z.abs())}};
}

Json conductor_json(const Conductor& c) {
    Json places = Json::array();
    for (const auto& [P, mult] : c.entries)
        places.push_back(Json{{"place", P.to_string()}, {"degree", P.degree}, {"rp", mult - 1}, {"multiplicity", mult}});
    return Json{{"degree", c.degree}, {"places", places}};
}

Json places_json(const std::vector<Place>& ps) {
    Json a = Json::array();
    for (const auto& P : ps) a.push_back(P.to_string());
    return a;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

void emit(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

std::string csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

std::string csv_reports(const std::vector<BoundReport>& reports) {
    std::string s = "instance,|S|,bound,ratio\n";
    for (const auto& r : reports)
        s += csv_quote(r.instance) + "," + csv_number(r.measured) + "," + csv_number(r.bound) + "," + csv_number(r.ratio) + "\n";
    return s;
}

Json report_json(const BoundReport& r) {
    Json j{{"instance", r.instance}, {"bound_name", r.bound_name}, {"abs", r.measured}, {"bound", r.bound}, {"ratio", r.ratio}, {"pass", r.pass}};
    if (r.exact) j["exact"] = cyclotomic_json(*r.exact);
    return j;
}

void require_format(const Options& o, bool csv_ok) {
    if (o.format == "json") return;
    if (o.format == "csv" && csv_ok) return;
    throw ParseError("--format " + o.format + " is not available for this command");
}

/// Runs body(C, domain) on P^1 or on the curve given by --curve, over F_{p^m}.
template <class Body>
auto with_curve(const Options& o, const Ring& r, Body body) {
    const FiniteField& k = FiniteField::get(r.p, r.m);
    if (o.curve.empty()) {
        const ProjectiveLine L(k);
        return body(L, parse::rational_domain(k));
    }
    const EllipticCurve E(k, parse::curve_coefficients(k, o.curve));
    return body(E, parse::elliptic_domain(E));
}

// sum --------------------------------------------------------------------------------------------

int run_sum(const Options& o) {
    require_format(o, true);
    if (o.ring.empty()) throw ParseError("sum needs --ring");
    if (o.f.empty() == o.f_witt.empty()) throw ParseError("sum needs exactly one of --f and --f-witt");
    const Ring r = parse_ring(o.ring);
    const GaloisRing& R = GaloisRing::get(r.p, r.l, r.m);
    std::optional<GrElement> b;
    if (!o.twist.empty()) b = parse::gr_element(R, o.twist);
    Json j{{"ring", ring_json(r)}};
    std::vector<BoundReport> reports;
    if (!o.f.empty()) {
        if (!o.curve.empty() || o.d != 1) throw ParseError("--curve and --d go with --f-witt");
        const GrPolynomial f = parse::gr_polynomial(R, o.f);
        const CharSumResult S = sum_teichmuller(R, f, b);
        j["f"] = o.f;
        j["sum"] = cyclotomic_json(S.value);
        j["sum"]["modulus"] = static_cast<double>(S.modulus);
        j["sum"]["terms"] = S.terms;
        // Teichmuller decomposition f = sum p^i f_i, degrees of the f_i
        std::vector<long> degs(r.l, -1);
        for (std::size_t e = 0; e < f.size(); ++e) {
            const auto digits = R.teichmuller_digits(f[e]);
            for (unsigned i = 0; i < r.l; ++i)
                if (!digits[i].is_zero()) degs[i] = static_cast<long>(e);
        }
        j["conductor"] = Json::object();
        j["bounds"] = Json::object();
        try {
            const double B = bound_degree(r.p, r.l, r.m, degs);
            j["bounds"]["kumar"] = B;
            reports.push_back(make_report(o.f, "kumar", S.value, B));
        } catch (const Degenerate&) {
        }
    } else {
        with_curve(o, r, [&](const auto& C, const auto& D) {
            const auto f = parse::witt_vector(o.f_witt, r.p, r.l, D);
            const CharSumResult S = sum_witt(C, f, o.d, std::nullopt, b);
            j["f"] = o.f_witt;
            if (!o.curve.empty()) j["curve"] = o.curve;
            j["d"] = o.d;
            j["sum"] = cyclotomic_json(S.value);
            j["sum"]["modulus"] = static_cast<double>(S.modulus);
            j["sum"]["terms"] = S.terms;
            j["excluded"] = places_json(S.excluded);
            j["conductor"] = conductor_json(conductor(C, f));
            j["bounds"] = Json::object();
            if (is_nondegenerate(C, f)) {
                const double B = bound_conductor(C, f, o.d);
                j["bounds"]["thm31"] = B;
                reports.push_back(make_report(o.f_witt, "thm31", S.value, B));
            }
            return 0;
        });
    }
    bool pass = true;
    for (const auto& rep : reports) pass = pass && rep.pass;
    j["pass"] = pass;
    if (o.format == "csv") {
        if (reports.empty()) {
            emit(o, "instance,|S|,bound,ratio\n" + csv_quote(o.f.empty() ? o.f_witt : o.f) + "," + csv_number(j["sum"]["abs"].get<double>()) + ",,\n");
        } else {
            emit(o, csv_reports(reports));
        }
    } else {
        emit(o, j);
    }
    return 0;
}

// lfun -------------------------------------------------------------------------------------------

int run_lfun(const Options& o) {
    require_format(o, false);
    if (o.ring.empty() || o.f_witt.empty()) throw ParseError("lfun needs --ring and --f-witt");
    if (o.terms == 0) throw ParseError("lfun needs --terms");
    const Ring r = parse_ring(o.ring);
    return with_curve(o, r, [&](const auto& C, const auto& D) {
        const auto f = parse::witt_vector(o.f_witt, r.p, r.l, D);
        const LFunctionResult L = l_function(C, f, o.terms);
        Json j{{"ring", ring_json(r)}, {"f", o.f_witt}};
        if (!o.curve.empty()) j["curve"] = o.curve;
        Json sums = Json::array(), coeffs = Json::array(), text = Json::array(), moduli = Json::array(), roots = Json::array();
        for (const auto& s : L.sums) sums.push_back(cyclotomic_json(s));
        const long deg = L.claimed_degree;
        for (long n = 0; n <= std::max(deg, 0L); ++n) {
            coeffs.push_back(cyclotomic_json(L.coefficients[static_cast<std::size_t>(n)]));
            text.push_back(L.coefficients[static_cast<std::size_t>(n)].to_string());
        }
        for (const auto& z : L.inverse_roots) roots.push_back(Json{static_cast<double>(z.real()), static_cast<double>(z.imag())});
        for (auto v : L.root_moduli) moduli.push_back(static_cast<double>(v));
        j["sum"] = L.sums.empty() ? Json::object() : cyclotomic_json(L.sums[0]);
        j["sums"] = sums;
        j["conductor"] = conductor_json(conductor(C, f));
        j["lfunction"] = Json{{"degree", deg},
                              {"coefficients", text},
                              {"exact", coeffs},
                              {"trailing_zero", L.degree_ok},
                              {"inverse_roots", roots},
                              {"root_moduli", moduli},
                              {"expected_modulus", static_cast<double>(L.expected_modulus)},
                              {"rh", L.rh_ok}};
        j["bounds"] = Json{{"thm31", bound_conductor(C, f, 1)}};
        j["pass"] = L.degree_ok && L.rh_ok;
        emit(o, j);
        return 0;
    });
}

// bound ------------------------------------------------------------------------------------------

BoundInputs bound_inputs(const Options& o) {
    if (o.p == 0) throw ParseError("this bound needs --p");
    BoundInputs in;
    in.p = o.p;
    in.l = o.l;
    in.m = o.m;
    in.g = o.g;
    if (o.poles.empty()) throw ParseError("this bound needs --poles");
    for (const auto& item : split(o.poles, ';')) {
        const auto f = split(item, ':');
        if (f.size() < 2 || f.size() > 4) throw ParseError("--poles entries are deg:n0,n1,...[:v[:v0]]");
        PoleInput P;
        P.degree = static_cast<unsigned>(to_long(f[0], "place degree"));
        for (const auto& n : split(f[1], ',')) P.orders.push_back(to_long(n, "pole order"));
        if (f.size() > 2) P.v = to_long(f[2], "v");
        if (f.size() > 3) P.v0 = to_long(f[3], "v0");
        in.poles.push_back(P);
    }
    return in;
}

int run_bound(const Options& o) {
    require_format(o, false);
    Json j;
    if (o.kind == "kumar") {
        if (o.ring.empty() || o.degs.empty()) throw ParseError("bound kumar needs --ring and --degs");
        const Ring r = parse_ring(o.ring);
        const double B = bound_degree(r.p, r.l, r.m, o.degs);
        const double scale = std::pow(static_cast<double>(r.p), r.m / 2.0);
        j = Json{{"ring", ring_json(r)}, {"degs", o.degs}, {"bound", "kumar"}, {"coefficient", std::lround(B / scale)}, {"value", B}};
        j["bounds"] = Json{{"kumar", B}};
    } else if (o.kind == "thm31") {
        if (o.ring.empty() || o.f_witt.empty()) throw ParseError("bound thm31 needs --ring and --f-witt");
        const Ring r = parse_ring(o.ring);
        with_curve(o, r, [&](const auto& C, const auto& D) {
            const auto f = parse::witt_vector(o.f_witt, r.p, r.l, D);
            const double B = bound_conductor(C, f, o.d);
            const Conductor cd = conductor(C, f);
            j = Json{{"ring", ring_json(r)}, {"f", o.f_witt}, {"d", o.d}, {"bound", "thm31"},
                     {"coefficient", 2 * (static_cast<long>(C.genus()) - 1) + cd.degree}, {"value", B}};
            j["conductor"] = conductor_json(cd);
            j["bounds"] = Json{{"thm31", B}};
            return 0;
        });
    } else if (o.kind == "thm51" || o.kind == "cor52" || o.kind == "cor53") {
        const BoundInputs in = bound_inputs(o);
        const ClosedFormBound B = o.kind == "thm51" ? bound_pole_orders(in) : o.kind == "cor52" ? bound_length_two(in) : bound_odd_p(in);
        j = Json{{"ring", Json{{"p", in.p}, {"l", in.l}, {"m", in.m}}}, {"g", in.g}, {"poles", o.poles}, {"bound", o.kind},
                 {"coefficient", B.coefficient}, {"value", B.value}};
        j["bounds"] = Json{{o.kind, B.value}};
    } else {
        throw ParseError("unknown bound \"" + o.kind + "\" (kumar, thm31, thm51, cor52, cor53)");
    }
    emit(o, j);
    return 0;
}

// verify -----------------------------------------------------------------------------------------

int finish_verify(const Options& o, const std::string& name, const Json& head, const std::vector<BoundReport>& reports) {
    const SweepSummary s = summarize(reports);
    if (o.format == "csv") {
        emit(o, csv_reports(reports));
    } else {
        Json j = head;
        j["bound"] = name;
        j["summary"] = Json{{"instances", s.instances}, {"violations", s.violations}, {"max_ratio", s.max_ratio}};
        Json a = Json::array();
        for (const auto& r : reports) a.push_back(report_json(r));
        j["reports"] = a;
        j["pass"] = s.violations == 0;
        emit(o, j);
    }
    return s.violations == 0 ? 0 : kExitViolations;
}

int run_verify(const Options& o) {
    require_format(o, true);
    if (o.ring.empty()) throw ParseError("verify needs --ring");
    const Ring r = parse_ring(o.ring);
    if (o.kind == "kumar") {
        DegreeFamily fam;
        fam.p = r.p;
        fam.l = r.l;
        fam.m = r.m;
        for (long v : o.degs) {
            if (v < 0) throw ParseError("--degs must be nonnegative for a sweep");
            fam.max_degrees.push_back(static_cast<unsigned>(v));
        }
        if (o.sample) fam.sample = o.sample;
        fam.seed = o.seed;
        return finish_verify(o, "kumar", Json{{"ring", ring_json(r)}, {"degs", o.degs}}, verify_sweep(fam));
    }
    if (o.kind == "thm31") {
        if (r.l != 2) throw ParseError("verify thm31 sweeps (x^a, x^b) and needs l = 2");
        return with_curve(o, r, [&](const auto& C, const auto& D) {
            using Fn = typename std::decay_t<decltype(D)>::value_type;
            std::vector<std::pair<std::string, WittVector<Fn>>> family;
            const auto X = D.names.at("x");
            for (unsigned a = 0; a <= o.max_a; ++a)
                for (unsigned b = 0; b <= o.max_b; ++b)
                    family.emplace_back("(x^" + std::to_string(a) + ",x^" + std::to_string(b) + ")",
                                        WittVector<Fn>(WittParams(r.p, 2), {ring_power(X, a), ring_power(X, b)}));
            Json head{{"ring", ring_json(r)}, {"dmax", o.dmax}};
            if (!o.curve.empty()) head["curve"] = o.curve;
            return finish_verify(o, "thm31", head, verify_sweep(C, family, o.dmax));
        });
    }
    throw ParseError("unknown sweep \"" + o.kind + "\" (kumar, thm31)");
}

// witt -------------------------------------------------------------------------------------------

template <class R>
Json witt_op(const Options& o, const parse::Domain<R>& D) {
    const unsigned arity = (o.op == "add" || o.op == "sub" || o.op == "mul") ? 2 : 1;
    if (o.operands.size() != arity) throw ParseError("witt " + o.op + " takes " + std::to_string(arity) + " operand(s)");
    const auto a = parse::witt_vector(o.operands[0], o.p, o.l, D);
    WittVector<R> res = a;
    if (arity == 2) {
        const auto b = parse::witt_vector(o.operands[1], o.p, o.l, D);
        res = o.op == "add" ? a + b : o.op == "sub" ? a - b : a * b;
    } else if (o.op == "neg") {
        res = -a;
    } else if (o.op == "F") {
        res = frobenius(a);
    } else if (o.op == "V") {
        res = verschiebung(a);
    } else if (o.op == "wp") {
        res = wp(a);
    } else {
        throw ParseError("unknown witt operation \"" + o.op + "\" (add, sub, mul, neg, F, V, wp)");
    }
    std::ostringstream s;
    s << res;
    Json comps = Json::array();
    for (unsigned i = 0; i < res.length(); ++i) {
        std::ostringstream c;
        c << res[i];
        comps.push_back(c.str());
    }
    return Json{{"p", o.p}, {"l", o.l}, {"over", o.over}, {"op", o.op}, {"operands", o.operands}, {"result", s.str()}, {"components", comps}};
}

int run_witt(const Options& o) {
    require_format(o, false);
    if (o.p == 0) throw ParseError("witt needs --p");
    if (!is_prime(o.p) || o.l == 0 || o.l > kMaxWittLength) throw ParseError("witt needs a prime --p and 1 <= --l <= 4");
    std::string over = o.over;
    const bool functions = over.size() > 3 && over.substr(over.size() - 3) == "(x)";
    if (functions) over = over.substr(0, over.size() - 3);
    const FiniteField& k = parse::field(over);
    if (k.characteristic() != o.p) throw ParseError("--over must have characteristic --p");
    emit(o, functions ? witt_op(o, parse::rational_domain(k)) : witt_op(o, parse::field_domain(k)));
    return 0;
}

// genus ------------------------------------------------------------------------------------------

int run_genus(const Options& o) {
    require_format(o, false);
    if (o.ring.empty() || o.f_witt.empty()) throw ParseError("genus needs --ring and --f-witt");
    const Ring r = parse_ring(o.ring);
    return with_curve(o, r, [&](const auto& C, const auto& D) {
        const auto f = parse::witt_vector(o.f_witt, r.p, r.l, D);
        Json j{{"ring", ring_json(r)}, {"f", o.f_witt}};
        if (!o.curve.empty()) j["curve"] = o.curve;
        j["base_genus"] = C.genus();
        j["conductor"] = conductor_json(conductor(C, f));
        j["genus"] = genus_of_cover(C, f);
        emit(o, j);
        return 0;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponential sums, conductors and bounds for Witt vectors over function fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--out", o.out, "write the report to this file");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto ring = [&](CLI::App* s) { s->add_option("--ring", o.ring, "p,l,m: Witt length l over F_{p^m}"); };
    auto function_opts = [&](CLI::App* s) {
        s->add_option("--f-witt", o.f_witt, "Witt vector of functions, \"(f0,...,f_{l-1})\"");
        s->add_option("--curve", o.curve, "Weierstrass equation in x, y (default: the projective line)");
    };

    auto* sum = app.add_subcommand("sum", "exponential sum");
    ring(sum);
    sum->add_option("--f", o.f, "polynomial in T over GR(p^l, m)");
    function_opts(sum);
    sum->add_option("--d", o.d, "constant field extension degree")->check(CLI::PositiveNumber);
    sum->add_option("--twist", o.twist, "character twist b in GR(p^l, m)");

    auto* lfun = app.add_subcommand("lfun", "L-polynomial from the first sums");
    ring(lfun);
    function_opts(lfun);
    lfun->add_option("--terms", o.terms, "number of sums S_1..S_N");

    auto* bound = app.add_subcommand("bound", "evaluate a bound");
    bound->add_option("kind", o.kind, "kumar, thm31, thm51, cor52 or cor53")->required();
    ring(bound);
    function_opts(bound);
    bound->add_option("--d", o.d)->check(CLI::PositiveNumber);
    bound->add_option("--degs", o.degs, "component degrees")->delimiter(',');
    bound->add_option("--p", o.p);
    bound->add_option("--l", o.l);
    bound->add_option("--m", o.m);
    bound->add_option("--g", o.g, "genus");
    bound->add_option("--poles", o.poles, "deg:n0,n1,...[:v[:v0]] separated by ';'");

    auto* verify = app.add_subcommand("verify", "brute-force sweep against a bound");
    verify->add_option("kind", o.kind, "kumar or thm31")->required();
    ring(verify);
    verify->add_option("--curve", o.curve);
    verify->add_option("--degs", o.degs, "maximal component degrees")->delimiter(',');
    verify->add_option("--sample", o.sample, "random instances instead of all");
    verify->add_option("--seed", o.seed);
    verify->add_option("--max-a", o.max_a);
    verify->add_option("--max-b", o.max_b);
    verify->add_option("--dmax", o.dmax)->check(CLI::PositiveNumber);

    auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
    witt->add_option("op", o.op, "add, sub, mul, neg, F, V or wp")->required();
    witt->add_option("operands", o.operands)->required();
    witt->add_option("--p", o.p);
    witt->add_option("--l", o.l);
    witt->add_option("--over", o.over, "coefficient field, e.g. f4, or f2(x) for rational functions");

    auto* genus = app.add_subcommand("genus", "genus of the cover");
    ring(genus);
    function_opts(genus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sum->parsed()) return run_sum(o);
        if (lfun->parsed()) return run_lfun(o);
        if (bound->parsed()) return run_bound(o);
        if (verify->parsed()) return run_verify(o);
        if (witt->parsed()) return run_witt(o);
        if (genus->parsed()) return run_genus(o);
    } catch (const CapExceeded& e) {
        std::cerr << "aswsum: " << e.what() << "\n";
        return kExitCap;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "aswsum: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::domain_error& e) {
        std::cerr << "aswsum: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::invalid_argument& e) {
        std::cerr << "aswsum: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "aswsum: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
