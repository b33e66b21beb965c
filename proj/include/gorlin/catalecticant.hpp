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

#ifndef GORLIN_CATALECTICANT_HPP
#define GORLIN_CATALECTICANT_HPP

#include <map>

#include "gorlin/divided.hpp"
#include "gorlin/matrix.hpp"

namespace gorlin {

/// Middle catalecticant matrix of a degree-(2n-2) inverse system, indexed
/// both ways by the degree-(n-1) monomials in listing order. The entry at
/// (m1, m2) is the coefficient of (m1 m2)* in phi.
PolyMatrix cat_matrix(const InverseSystem& f);

/// T, its determinant delta, its classical adjoint Q, and the forms
/// lambda_m = sum over m1 of m1 * Q[m1, m].
struct Catalecticant {
    int n = 0;
    PolyMatrix T;
    Polynomial delta;
    PolyMatrix Q;
    std::map<Monomial, Polynomial> lambda;

    const RingDesc& ring() const { return T.ring(); }
    /// Position of a degree-(n-1) monomial in the matrix basis.
    std::size_t index(const Monomial& m) const;
    /// Q entry addressed by basis monomials.
    const Polynomial& q_entry(const Monomial& m1, const Monomial& m2) const;
};

Catalecticant catalecticant(const InverseSystem& f);

/// The lambda map of a catalecticant (also stored on the struct).
std::map<Monomial, Polynomial> lambdas(const Catalecticant& cat);

/// Linear extension of m2* -> sum over m1 of Q[m1, m2] m1, applied to a
/// degree-(n-1) divided element. DegreeError on any other degree.
Polynomial q_apply(const Catalecticant& cat, const DividedElement& nu);

/// The symmetric bilinear form sending (m1*, m2*) to Q[m1, m2], extended
/// over the coefficient ring. DegreeError unless both inputs have degree n-1.
Polynomial qq_pair(const Catalecticant& cat, const DividedElement& nu1,
                   const DividedElement& nu2);

} // namespace gorlin

#endif // GORLIN_CATALECTICANT_HPP
