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

#ifndef ASWSUM_PLACE_HPP
#define ASWSUM_PLACE_HPP

#include <climits>
#include <string>
#include <tuple>

#include "finite_field.hpp"
#include "polynomial.hpp"

namespace aswsum {

/// Valuation of the zero function.
inline constexpr long kInfiniteValuation = LONG_MAX;

/*
   A place of P^1 (a monic irreducible, or infinity) or of a Weierstrass model (the origin, or
   the Frobenius orbit of an affine point given by one representative). The residue field is
   carried along; for finite places of P^1 so is the chosen root of the polynomial.
*/
struct Place {
    enum class Kind { Finite, Infinity, Origin, Affine };

    Kind kind = Kind::Infinity;
    unsigned degree = 1;
    FieldPoly poly;                         // Finite
    Gf x, y;                                // Affine representative, over the residue field
    const FiniteField* residue = nullptr;   // F_{q^degree}
    Gf root;                                // Finite: root of poly in the residue field

    bool is_rational() const noexcept { return degree == 1; }
    const FiniteField& residue_field() const { return *residue; }

    std::string to_string() const {
        switch (kind) {
            case Kind::Finite: return "(" + poly.to_string() + ")";
            case Kind::Infinity: return "inf";
            case Kind::Origin: return "O";
            case Kind::Affine: return "(" + x.to_string() + "," + y.to_string() + ")" + (degree > 1 ? "^" + std::to_string(degree) : "");
        }
        return "?";
    }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.kind != b.kind || a.degree != b.degree) return false;
        switch (a.kind) {
            case Kind::Finite: return a.poly == b.poly;
            case Kind::Affine: return a.x == b.x && a.y == b.y;
            default: return true;
        }
    }
    /// Infinity and the origin first, then by degree and polynomial (or point) index.
    friend bool operator<(const Place& a, const Place& b) {
        auto rank = [](Kind k) { return k == Kind::Infinity || k == Kind::Origin ? 0 : 1; };
        if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.kind == Kind::Finite) return a.poly < b.poly;
        if (a.kind == Kind::Affine) return std::make_tuple(a.x.index(), a.y.index()) < std::make_tuple(b.x.index(), b.y.index());
        return false;
    }
};

}  // namespace aswsum

#endif  // ASWSUM_PLACE_HPP
