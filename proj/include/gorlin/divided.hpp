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

#ifndef GORLIN_DIVIDED_HPP
#define GORLIN_DIVIDED_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gorlin/polynomial.hpp"

namespace gorlin {

/// Element of the degree-N component of the divided-power module: a finite
/// map from degree-N monomials m to coefficients of m*. Coefficients live in
/// the coefficient ring (rationals in specialized mode, t-polynomials in
/// generic mode) and never carry x, y, z.
///
/// Only the contraction action of the polynomial ring is implemented; there
/// is no product of two divided elements.
class DividedElement {
public:
    DividedElement() : DividedElement(RingDesc(), 0) {}
    DividedElement(const RingDesc& ring, int degree);

    const RingDesc& ring() const { return ring_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Adds coeff * m*. The monomial must have the element's degree and the
    /// coefficient must be free of x, y, z.
    void add(const Monomial& m, const Polynomial& coeff);
    void add(const Monomial& m, const Rational& coeff);

    const std::map<Monomial, Polynomial>& coeffs() const { return coeffs_; }
    /// Coefficient of m*, zero when absent.
    Polynomial coeff(const Monomial& m) const;

    DividedElement operator+(const DividedElement& o) const;
    DividedElement operator-(const DividedElement& o) const;
    /// Multiply every coefficient by an x,y,z-free polynomial.
    DividedElement scaled(const Polynomial& s) const;
    DividedElement scaled(const Rational& s) const;

    bool operator==(const DividedElement& o) const;
    bool operator!=(const DividedElement& o) const { return !(*this == o); }

    /// For degree-zero elements: the coefficient of 1*.
    Polynomial as_scalar() const;

    std::string str() const;

private:
    RingDesc ring_;
    int degree_ = 0;
    std::map<Monomial, Polynomial> coeffs_;
};

/// Contraction m(nu): each dual monomial divides out m when possible and is
/// dropped otherwise.
DividedElement contract(const Monomial& m, const DividedElement& nu);

/// Contraction by an x,y,z-homogeneous polynomial (t coefficients allowed;
/// they multiply into the result coefficients). Throws DegreeError when the
/// polynomial degree exceeds the element degree, InputError for zero or
/// inhomogeneous input.
DividedElement contract(const Polynomial& p, const DividedElement& nu);

/// An inverse-system datum: n >= 2 together with a degree-(2n-2) divided
/// element. In generic mode the coefficient of m* is the variable t_m.
struct InverseSystem {
    int n = 0;
    DividedElement phi;

    bool is_generic() const { return phi.ring().is_generic(); }
};

/// Specialized inverse system from explicit coefficients. Every listed
/// monomial must have degree 2n-2; unlisted monomials get coefficient zero.
InverseSystem build_phi(int n, const std::vector<std::pair<Monomial, Rational>>& coeffs);

/// Generic inverse system: sum of t_m m* over all monomials of degree 2n-2.
InverseSystem generic_phi(int n);

/// The degree-(2n-1) lift: sum of phi(m) (x m)*. Contracting by x recovers
/// phi, and every degree-(2n-1) monomial in y,z alone contracts to zero.
DividedElement phi_tilde(const InverseSystem& f);

/// Inverse system of the ideal (x^n, y^n, z^n) : (x+y+z)^(n-1), i.e. the sum
/// over a+b+c = n-1 of multinomial(n-1; a,b,c) (x^(n-1-a) y^(n-1-b) z^(n-1-c))*.
InverseSystem colon_inverse_system(int n);

/// n! / (a! b! c!) for a+b+c = n.
Rational multinomial(int n, int a, int b, int c);

/// Coefficient of m* in phi (m of degree 2n-2): the scalar alpha_m in
/// specialized mode, the variable t_m in generic mode.
Polynomial phi_coeff(const InverseSystem& f, const Monomial& m);

} // namespace gorlin

#endif // GORLIN_DIVIDED_HPP
