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

#ifndef ASWSUM_PARSE_HPP
#define ASWSUM_PARSE_HPP

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "charsum.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "galois_ring.hpp"
#include "rational_function.hpp"
#include "witt.hpp"

namespace aswsum {
namespace parse {

/*
   expr  := term (('+' | '-') term)*
   term  := unary (('*' | '/') unary)*
   unary := '-' unary | power
   power := atom ('^' ['-'] integer)?
   atom  := integer | name | '(' expr ')' | '{' expr (',' expr)* '}'

   Braces hold Teichmuller digits of a Galois-ring constant.
*/
struct Node {
    enum class Kind { Number, Name, Add, Sub, Mul, Div, Neg, Pow, Digits };
    Kind kind;
    long long number = 0;
    std::string name;
    std::vector<std::shared_ptr<Node>> kids;
};
using NodePtr = std::shared_ptr<Node>;

class Parser {
   public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return n;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at column " + std::to_string(i_ + 1) + " in \"" + s_ + "\": " + what);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    static NodePtr make(Node::Kind k, std::vector<NodePtr> kids) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->kids = std::move(kids);
        return n;
    }
    NodePtr expr() {
        NodePtr a = term();
        for (;;) {
            if (eat('+')) a = make(Node::Kind::Add, {a, term()});
            else if (eat('-')) a = make(Node::Kind::Sub, {a, term()});
            else return a;
        }
    }
    NodePtr term() {
        NodePtr a = unary();
        for (;;) {
            if (eat('*')) a = make(Node::Kind::Mul, {a, unary()});
            else if (eat('/')) a = make(Node::Kind::Div, {a, unary()});
            else return a;
        }
    }
    NodePtr unary() {
        if (eat('-')) return make(Node::Kind::Neg, {unary()});
        return power();
    }
    NodePtr power() {
        NodePtr a = atom();
        if (eat('^')) {
            const bool neg = eat('-');
            skip();
            if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("exponent must be an integer");
            auto e = std::make_shared<Node>();
            e->kind = Node::Kind::Number;
            e->number = integer() * (neg ? -1 : 1);
            a = make(Node::Kind::Pow, {a, e});
        }
        return a;
    }
    long long integer() {
        long long v = 0;
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > (1LL << 56)) fail("integer literal too large");
            v = 10 * v + (s_[i_++] - '0');
        }
        if (i_ == start) fail("expected an integer");
        return v;
    }
    NodePtr atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Number;
            n->number = integer();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Name;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) n->name += s_[i_++];
            return n;
        }
        if (eat('(')) {
            NodePtr n = expr();
            if (!eat(')')) fail("expected ')'");
            return n;
        }
        if (eat('{')) {
            std::vector<NodePtr> kids{expr()};
            while (eat(',')) kids.push_back(expr());
            if (!eat('}')) fail("expected '}'");
            return make(Node::Kind::Digits, std::move(kids));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t i_ = 0;
};

inline NodePtr parse_expression(const std::string& text) { return Parser(text).parse(); }

/// How to read an expression in a target ring.
template <class R>
struct Domain {
    using value_type = R;
    std::function<R(long long)> integer;
    std::map<std::string, R> names;
    std::function<R(const R&, const R&)> divide;                 // empty: division not allowed
    std::function<R(const std::vector<NodePtr>&)> digits;        // empty: braces not allowed
};

template <class R>
R evaluate(const Node& n, const Domain<R>& D) {
    using K = Node::Kind;
    switch (n.kind) {
        case K::Number: return D.integer(n.number);
        case K::Name: {
            auto it = D.names.find(n.name);
            if (it == D.names.end()) throw ParseError("unknown name '" + n.name + "'");
            return it->second;
        }
        case K::Add: return evaluate(*n.kids[0], D) + evaluate(*n.kids[1], D);
        case K::Sub: return evaluate(*n.kids[0], D) - evaluate(*n.kids[1], D);
        case K::Mul: return evaluate(*n.kids[0], D) * evaluate(*n.kids[1], D);
        case K::Neg: return D.integer(0) - evaluate(*n.kids[0], D);
        case K::Div:
            if (!D.divide) throw ParseError("division is not available here");
            try {
                return D.divide(evaluate(*n.kids[0], D), evaluate(*n.kids[1], D));
            } catch (const std::domain_error& e) {
                throw PreconditionViolated(e.what());
            }
        case K::Pow: {
            const long long e = n.kids[1]->number;
            R base = evaluate(*n.kids[0], D);
            if (e < 0) {
                if (!D.divide) throw ParseError("negative exponent needs division");
                base = D.divide(D.integer(1), base);
            }
            return ring_power(base, static_cast<std::uint64_t>(e < 0 ? -e : e));
        }
        case K::Digits:
            if (!D.digits) throw ParseError("digit lists are only allowed for Galois-ring constants");
            return D.digits(n.kids);
    }
    throw InternalError("bad expression node");
}

template <class R>
R evaluate(const std::string& text, const Domain<R>& D) {
    return evaluate(*parse_expression(text), D);
}

/// "F_9", "f9", "9" or "3^2".
inline const FiniteField& field(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!s.empty() && s[0] == 'f') s = s.substr(1);
    try {
        std::uint64_t q;
        if (auto caret = s.find('^'); caret != std::string::npos) {
            q = checked_pow(std::stoull(s.substr(0, caret)), static_cast<unsigned>(std::stoul(s.substr(caret + 1))));
        } else {
            std::size_t used = 0;
            q = std::stoull(s, &used);
            if (used != s.size()) throw ParseError("");
        }
        for (std::uint64_t p = 2; p <= q; ++p) {
            if (q % p) continue;
            if (!is_prime(p)) break;
            unsigned m = 0;
            std::uint64_t r = q;
            while (r % p == 0) {
                r /= p;
                ++m;
            }
            if (r != 1) break;
            return FiniteField::get(static_cast<unsigned>(p), m);
        }
    } catch (const std::logic_error&) {
    }
    throw ParseError("not a finite field order: \"" + spec + "\"");
}

/// Elements of k: integers and the generator a.
inline Domain<Gf> field_domain(const FiniteField& k) {
    Domain<Gf> D;
    D.integer = [&k](long long v) { return k.from_int(v); };
    D.names = {{"a", k.generator()}};
    D.divide = [](const Gf& x, const Gf& y) { return x / y; };
    return D;
}

inline Gf field_element(const FiniteField& k, const std::string& text) { return evaluate(text, field_domain(k)); }

inline Domain<RationalFunction> rational_domain(const FiniteField& k) {
    Domain<RationalFunction> D;
    D.integer = [&k](long long v) { return RationalFunction::constant(k.from_int(v)); };
    D.names = {{"x", RationalFunction::x(k)}, {"a", RationalFunction::constant(k.generator())}};
    D.divide = [](const RationalFunction& x, const RationalFunction& y) { return x / y; };
    return D;
}

inline RationalFunction rational_function(const FiniteField& k, const std::string& text) {
    return evaluate(text, rational_domain(k));
}

inline Domain<EllipticFunction> elliptic_domain(const EllipticCurve& E) {
    const FiniteField& k = E.constant_field();
    Domain<EllipticFunction> D;
    D.integer = [&E, &k](long long v) { return E.constant(k.from_int(v)); };
    D.names = {{"x", E.x()}, {"y", E.y()}, {"a", E.constant(k.generator())}};
    D.divide = [](const EllipticFunction& x, const EllipticFunction& y) {
        if (!y.is_constant() || y.is_zero()) throw ParseError("only division by nonzero constants in the coordinate ring");
        return y.constant_value().inverse() * x;
    };
    return D;
}

inline EllipticFunction elliptic_function(const EllipticCurve& E, const std::string& text) {
    return evaluate(text, elliptic_domain(E));
}

/// Polynomials in T over GR(p^l, m).
struct GrPoly {
    const GaloisRing* R = nullptr;
    GrPolynomial c;

    static GrPoly constant(const GrElement& a) { return {&a.ring(), {a}}; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    friend GrPoly operator+(GrPoly a, const GrPoly& b) {
        if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), a.R->zero());
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] = a.c[i] + b.c[i];
        a.trim();
        return a;
    }
    friend GrPoly operator-(GrPoly a, const GrPoly& b) {
        if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), a.R->zero());
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] = a.c[i] - b.c[i];
        a.trim();
        return a;
    }
    friend GrPoly operator*(const GrPoly& a, const GrPoly& b) {
        GrPoly r{a.R, {}};
        if (a.c.empty() || b.c.empty()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, a.R->zero());
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
};

}  // namespace parse

template <>
struct coefficient_traits<parse::GrPoly> {
    static parse::GrPoly zero_like(const parse::GrPoly& a) { return {a.R, {}}; }
    static parse::GrPoly one_like(const parse::GrPoly& a) { return parse::GrPoly::constant(a.R->one()); }
    static parse::GrPoly scale(const parse::GrPoly& a, long long n) { return parse::GrPoly::constant(a.R->from_int(n)) * a; }
    static bool same_ring(const parse::GrPoly& a, const parse::GrPoly& b) { return a.R == b.R; }
    static constexpr bool characteristic_zero = false;
};

namespace parse {

/// Polynomial in T with integer coefficients mod p^l, the generator a, and digit lists {b_0, b_1, ...}.
inline GrPolynomial gr_polynomial(const GaloisRing& R, const std::string& text) {
    Domain<GrPoly> D;
    D.integer = [&R](long long v) { return GrPoly::constant(R.from_int(v)); };
    D.names = {{"T", GrPoly{&R, {R.zero(), R.one()}}}};
    if (R.degree() > 1) D.names["a"] = GrPoly::constant(R.generator());
    D.digits = [&R](const std::vector<NodePtr>& kids) {
        if (kids.size() > R.length()) throw ParseError("more digits than the ring length");
        std::vector<Gf> b;
        const auto FD = field_domain(R.residue_field());
        for (const auto& k : kids) b.push_back(evaluate(*k, FD));
        while (b.size() < R.length()) b.push_back(R.residue_field().zero());
        return GrPoly::constant(R.from_teichmuller_digits(b));
    };
    GrPoly f = evaluate(text, D);
    return f.c;
}

inline GrElement gr_element(const GaloisRing& R, const std::string& text) {
    const GrPolynomial f = gr_polynomial(R, text);
    if (f.size() > 1) throw ParseError("expected a constant of " + R.name());
    return f.empty() ? R.zero() : f[0];
}

/// Splits "(e_0, ..., e_{l-1})" at top-level commas.
inline std::vector<std::string> vector_components(const std::string& text) {
    std::string s = text;
    auto trim = [](std::string t) {
        const auto a = t.find_first_not_of(" \t"), b = t.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
    };
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("a Witt vector is written (f_0, ..., f_{l-1})");
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    for (const auto& c : out)
        if (c.empty()) throw ParseError("empty Witt vector component");
    return out;
}

template <class R>
WittVector<R> witt_vector(const std::string& text, unsigned p, unsigned l, const Domain<R>& D) {
    const auto comps = vector_components(text);
    if (comps.size() != l)
        throw ParseError("expected " + std::to_string(l) + " components, got " + std::to_string(comps.size()));
    std::vector<R> c;
    for (const auto& s : comps) c.push_back(evaluate(s, D));
    return WittVector<R>(WittParams(p, l), c);
}

// x^i y^j -> coefficient
struct BiPoly {
    const FiniteField* k;
    std::map<std::pair<int, int>, Gf> t;
    void put(std::pair<int, int> e, const Gf& c) {
        auto it = t.find(e);
        if (it == t.end()) t.emplace(e, c);
        else it->second = it->second + c;
    }
    void clean() {
        for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) {
        for (auto& [e, c] : b.t) a.put(e, c);
        a.clean();
        return a;
    }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) {
        for (auto& [e, c] : b.t) a.put(e, -c);
        a.clean();
        return a;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r{a.k, {}};
        for (auto& [e1, c1] : a.t)
            for (auto& [e2, c2] : b.t) {
                const std::pair<int, int> e{e1.first + e2.first, e1.second + e2.second};
                r.put(e, c1 * c2);
            }
        r.clean();
        return r;
    }
};

}  // namespace parse

template <>
struct coefficient_traits<parse::BiPoly> {
    static parse::BiPoly zero_like(const parse::BiPoly& a) { return {a.k, {}}; }
    static parse::BiPoly one_like(const parse::BiPoly& a) { return {a.k, {{{0, 0}, a.k->one()}}}; }
    static bool same_ring(const parse::BiPoly& a, const parse::BiPoly& b) { return a.k == b.k; }
    static constexpr bool characteristic_zero = false;
};

namespace parse {

/*
   "y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6", any arrangement of the same monomials; the
   coefficients are read in k.
*/
inline std::array<Gf, 5> curve_coefficients(const FiniteField& k, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || spec.find('=', eq + 1) != std::string::npos) throw ParseError("curve needs exactly one '='");
    Domain<BiPoly> D;
    D.integer = [&k](long long v) {
        BiPoly b{&k, {{{0, 0}, k.from_int(v)}}};
        b.clean();
        return b;
    };
    D.names = {{"x", BiPoly{&k, {{{1, 0}, k.one()}}}}, {"y", BiPoly{&k, {{{0, 1}, k.one()}}}}, {"a", BiPoly{&k, {{{0, 0}, k.generator()}}}}};
    D.divide = [](const BiPoly& x, const BiPoly& y) {
        if (y.t.size() != 1 || y.t.begin()->first != std::make_pair(0, 0)) throw ParseError("only division by constants in a curve equation");
        BiPoly r = x;
        for (auto& [e, c] : r.t) c = c / y.t.begin()->second;
        return r;
    };
    const BiPoly G = evaluate(spec.substr(0, eq), D) - evaluate(spec.substr(eq + 1), D);
    auto coeff = [&](int i, int j) {
        auto it = G.t.find({i, j});
        return it == G.t.end() ? k.zero() : it->second;
    };
    for (auto& [e, c] : G.t) {
        static const std::pair<int, int> allowed[] = {{0, 2}, {1, 1}, {0, 1}, {3, 0}, {2, 0}, {1, 0}, {0, 0}};
        if (std::find(std::begin(allowed), std::end(allowed), e) == std::end(allowed))
            throw ParseError("curve is not in Weierstrass form (monomial x^" + std::to_string(e.first) + " y^" + std::to_string(e.second) + ")");
    }
    // normalize so that y^2 has coefficient 1 and x^3 has coefficient -1
    const Gf y2 = coeff(0, 2), x3 = coeff(3, 0);
    if (y2.is_zero() || x3.is_zero() || !(y2 + x3).is_zero()) throw ParseError("curve is not in Weierstrass form (need y^2 = x^3 + ...)");
    const Gf s = y2.inverse();
    return {s * coeff(1, 1), -(s * coeff(2, 0)), s * coeff(0, 1), -(s * coeff(1, 0)), -(s * coeff(0, 0))};
}

}  // namespace parse
}  // namespace aswsum

#endif  // ASWSUM_PARSE_HPP
