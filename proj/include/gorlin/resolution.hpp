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

#ifndef GORLIN_RESOLUTION_HPP
#define GORLIN_RESOLUTION_HPP

#include "gorlin/catalecticant.hpp"

namespace gorlin {

/// Basis of the first free module: duals over the degree-(n-1) monomials in
/// y,z, then the degree-n monomials in y,z. Rank 2n+1.
std::vector<Label> b1_basis(int n);

/// Basis of the second free module: the degree-(n-1) monomials in y,z, then
/// duals over the degree-n monomials in y,z. Rank 2n+1.
std::vector<Label> b2_basis(int n);

/// Row vector of the 2n+1 ideal generators.
///
/// Column at a dual label m*: x * lambda_m. Column at a monomial label m:
/// delta*m - x * sum over degree-(n-2) monomials m1 of lambda_{x m1} times
/// the phi coefficient of m1*m.
PolyMatrix build_b1(const Catalecticant& cat, const InverseSystem& f);

/// The (2n+1) x (2n+1) alternating presentation matrix with linear entries,
/// rows over b1_basis and columns over b2_basis.
PolyMatrix build_b2(const Catalecticant& cat, const InverseSystem& f);

/// Column vector over b2_basis: the entry at a monomial label m is the b1
/// entry at m*, and the entry at m* is the b1 entry at m.
PolyMatrix build_b3(const PolyMatrix& b1, int n);

/// Independent reconstruction of b2 from the alternating pairing
///   b((mu+nu) ^ (mu'+nu')) = beta3 + beta2 - beta2' + beta1
///                            + y delta ([z mu](nu') - [z mu'](nu))
///                            - z delta ([y mu](nu') - [y mu'](nu)),
/// where the beta forms contract the lift of phi against the Q pairing.
/// Entry (i,j) is b(e_j ^ e_i) over the b2_basis elements.
PolyMatrix b2_pairing_oracle(const Catalecticant& cat, const InverseSystem& f);

/// The assembled complex R <- B1 <- B2 <- B3 with its bigraded twists.
struct ResolutionComplex {
    int n = 0;
    InverseSystem phi;
    Catalecticant cat;
    PolyMatrix b1; // 1 x (2n+1)
    PolyMatrix b2; // (2n+1) x (2n+1)
    PolyMatrix b3; // (2n+1) x 1

    BiDegree twist_b0;                // (0, 0)
    std::vector<BiDegree> twist_b1;   // per generator
    std::vector<BiDegree> twist_b2;   // per generator
    BiDegree twist_b3;

    const RingDesc& ring() const { return b1.ring(); }

    /// Bidegree forced on each entry by the twists.
    BiDegree expected_b1_bidegree(std::size_t col) const;
    BiDegree expected_b2_bidegree(std::size_t row, std::size_t col) const;
    BiDegree expected_b3_bidegree(std::size_t row) const;
};

/// Build the whole complex. Throws DegenerateInverseSystem when a
/// specialized system has vanishing catalecticant determinant, and
/// CapacityError for generic systems with n > 3.
ResolutionComplex build_resolution(const InverseSystem& f);

} // namespace gorlin

#endif // GORLIN_RESOLUTION_HPP
