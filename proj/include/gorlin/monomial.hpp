/*
 * Copyright 2026 The gorlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GORLIN_MONOMIAL_HPP
#define GORLIN_MONOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

namespace gorlin {

/// A monomial x^a y^b z^c with non-negative exponents.
///
/// The fixed listing order is graded, and within one degree descending
/// lexicographic with x > y > z, so degree two lists as
/// x^2, xy, xz, y^2, yz, z^2. operator< is "comes earlier in the listing".
struct Monomial {
    int a = 0;
    int b = 0;
    int c = 0;

    constexpr Monomial() = default;
    constexpr Monomial(int xa, int yb, int zc) : a(xa), b(yb), c(zc) {}

    int degree() const { return a + b + c; }
    bool is_unit() const { return a == 0 && b == 0 && c == 0; }
    bool pure_yz() const { return a == 0; }

    bool divides(const Monomial& m) const {
        return a <= m.a && b <= m.b && c <= m.c;
    }

    Monomial operator*(const Monomial& m) const {
        return Monomial(a + m.a, b + m.b, c + m.c);
    }

    /// Exact quotient; the caller must ensure divisibility.
    Monomial operator/(const Monomial& m) const;

    bool operator==(const Monomial& m) const {
        return a == m.a && b == m.b && c == m.c;
    }
    bool operator!=(const Monomial& m) const { return !(*this == m); }

    /// Listing order: lower degree first, then lexicographically
    /// descending exponent vectors.
    bool operator<(const Monomial& m) const {
        if (degree() != m.degree()) return degree() < m.degree();
        if (a != m.a) return a > m.a;
        if (b != m.b) return b > m.b;
        return c > m.c;
    }

    /// "x^2*y*z", or "1" for the unit monomial.
    std::string str() const;
};

enum class VarSet { xyz, yz };

/// All monomials of the given degree in the chosen variables, in listing order.
/// Size is C(degree+2,2) for three variables and degree+1 for two.
std::vector<Monomial> monomial_basis(VarSet vars, int degree);

inline const Monomial kX{1, 0, 0};
inline const Monomial kY{0, 1, 0};
inline const Monomial kZ{0, 0, 1};

} // namespace gorlin

#endif // GORLIN_MONOMIAL_HPP
