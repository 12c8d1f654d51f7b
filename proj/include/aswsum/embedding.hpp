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

#ifndef ASWSUM_EMBEDDING_HPP
#define ASWSUM_EMBEDDING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "finite_field.hpp"
#include "polynomial.hpp"

namespace aswsum {

/*
   Coordinates over F_p of target in the span of basis (elements of one field), by Gaussian
   elimination on their F_p digit vectors; nullopt if target is outside the span.
*/
inline std::optional<std::vector<std::uint64_t>> solve_fp_coordinates(const FiniteField& field, const std::vector<Gf>& basis,
                                                                       const Gf& target) {
    const unsigned p = field.characteristic();
    const std::size_t rows = field.degree(), cols = basis.size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        auto d = field.digits(basis[j].index());
        for (std::size_t i = 0; i < rows; ++i) a[i][j] = d[i];
    }
    auto dy = field.digits(target.index());
    for (std::size_t i = 0; i < rows; ++i) a[i][cols] = dy[i];
    std::vector<long> pivot_row(cols, -1);
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t sel = r;
        while (sel < rows && a[sel][j] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        const std::uint64_t inv = invmod_prime(a[r][j], p);
        for (auto& v : a[r]) v = mulmod(v, inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][j] == 0) continue;
            const std::uint64_t f = a[i][j];
            for (std::size_t t = 0; t <= cols; ++t) a[i][t] = (a[i][t] + p - mulmod(f, a[r][t], p)) % p;
        }
        pivot_row[j] = static_cast<long>(r++);
    }
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    std::vector<std::uint64_t> c(cols, 0);
    for (std::size_t j = 0; j < cols; ++j)
        if (pivot_row[j] >= 0) c[j] = a[pivot_row[j]][cols];
    return c;
}

/*
   Embedding F_q -> F_{q^d} over F_p: the generator of the base goes to the smallest-index root
   of the base modulus in the extension. Preimages are found by solving for F_p-coordinates in
   the basis 1, b, ..., b^{m-1}.
*/
class FieldEmbedding {
   public:
    static const FieldEmbedding& get(const FiniteField& base, const FiniteField& ext) {
        static std::mutex mutex;
        static std::map<std::pair<const FiniteField*, const FiniteField*>, std::unique_ptr<FieldEmbedding>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[{&base, &ext}];
        if (!slot) slot = std::make_unique<FieldEmbedding>(base, ext);
        return *slot;
    }

    FieldEmbedding(const FiniteField& base, const FiniteField& ext) : base_(&base), ext_(&ext) {
        if (base.characteristic() != ext.characteristic() || ext.degree() % base.degree() != 0)
            throw std::invalid_argument(base.name() + " does not embed into " + ext.name());
        const unsigned m = base.degree();
        if (&base == &ext) {
            beta_ = ext.generator();
        } else if (m == 1) {
            beta_ = ext.zero();
        } else {
            std::vector<Gf> c;
            for (auto v : base.modulus()) c.push_back(ext.from_int(static_cast<long long>(v)));
            auto rs = roots(FieldPoly(ext, std::move(c)));
            if (rs.empty()) throw InternalError("base modulus has no root in " + ext.name());
            beta_ = rs.front();
        }
        // basis matrix: column i holds the F_p digits of beta^i
        Gf pw = ext.one();
        for (unsigned i = 0; i < m; ++i) {
            basis_.push_back(pw);
            pw *= beta_;
        }
        if (base.order() <= (1u << 20)) {
            table_.resize(base.order());
            for (std::uint64_t a = 0; a < base.order(); ++a) {
                table_[a] = slow_map(a);
                reverse_[table_[a]] = a;
            }
        }
    }

    const FiniteField& base() const { return *base_; }
    const FiniteField& ext() const { return *ext_; }
    unsigned degree() const { return ext_->degree() / base_->degree(); }
    Gf generator_image() const { return beta_; }

    Gf map(const Gf& a) const {
        if (a.field_ptr() != base_) throw std::invalid_argument("element not in the embedding's base field");
        if (!table_.empty()) return Gf(*ext_, table_[a.index()]);
        return Gf(*ext_, slow_map(a.index()));
    }

    FieldPoly map(const FieldPoly& f) const {
        std::vector<Gf> c;
        for (const Gf& g : f.coeffs()) c.push_back(map(g));
        return FieldPoly(*ext_, std::move(c));
    }

    std::optional<Gf> preimage(const Gf& y) const {
        if (y.field_ptr() != ext_) throw std::invalid_argument("element not in the embedding's extension field");
        if (!table_.empty()) {
            auto it = reverse_.find(y.index());
            if (it == reverse_.end()) return std::nullopt;
            return Gf(*base_, it->second);
        }
        return solve(y);
    }

    Gf pull(const Gf& y) const {
        auto r = preimage(y);
        if (!r) throw std::domain_error("element does not lie in the subfield " + base_->name());
        return *r;
    }

    FieldPoly pull(const FieldPoly& f) const {
        std::vector<Gf> c;
        for (const Gf& g : f.coeffs()) c.push_back(pull(g));
        return FieldPoly(*base_, std::move(c));
    }

    /// Minimal polynomial over the base of an extension element.
    FieldPoly minimal_polynomial(const Gf& y) const {
        const unsigned m = base_->degree();
        FieldPoly acc = FieldPoly::constant(ext_->one());
        Gf c = y;
        do {
            acc *= FieldPoly(*ext_, {-c, ext_->one()});
            c = c.frobenius(m);
        } while (!(c == y));
        return pull(acc);
    }

   private:
    std::uint64_t slow_map(std::uint64_t a) const {
        const auto d = base_->digits(a);
        Gf acc = ext_->zero();
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i]) acc += ext_->from_int(static_cast<long long>(d[i])) * basis_[i];
        return acc.index();
    }

    std::optional<Gf> solve(const Gf& y) const {
        auto c = solve_fp_coordinates(*ext_, basis_, y);
        if (!c) return std::nullopt;
        return base_->from_digits(*c);
    }

    const FiniteField* base_;
    const FiniteField* ext_;
    Gf beta_;
    std::vector<Gf> basis_;
    std::vector<std::uint64_t> table_;
    std::unordered_map<std::uint64_t, std::uint64_t> reverse_;
};

}  // namespace aswsum

#endif  // ASWSUM_EMBEDDING_HPP
