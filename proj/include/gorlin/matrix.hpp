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

#ifndef GORLIN_MATRIX_HPP
#define GORLIN_MATRIX_HPP

#include <string>
#include <vector>

#include "gorlin/polynomial.hpp"

namespace gorlin {

/// Basis label: a monomial m (kind Sym) or its dual m* (kind Dual).
struct Label {
    Monomial m;
    bool dual = false;

    bool operator==(const Label& o) const { return m == o.m && dual == o.dual; }
    std::string str() const { return dual ? "(" + m.str() + ")*" : m.str(); }
};

std::vector<Label> sym_labels(const std::vector<Monomial>& ms);
std::vector<Label> dual_labels(const std::vector<Monomial>& ms);

/// Dense matrix of polynomials with row/column basis labels.
class PolyMatrix {
public:
    PolyMatrix() : PolyMatrix(RingDesc(), {}, {}) {}
    PolyMatrix(const RingDesc& ring, std::vector<Label> row_labels,
               std::vector<Label> col_labels);

    const RingDesc& ring() const { return ring_; }
    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    const std::vector<Label>& row_labels() const { return row_labels_; }
    const std::vector<Label>& col_labels() const { return col_labels_; }

    Polynomial& at(std::size_t i, std::size_t j);
    const Polynomial& at(std::size_t i, std::size_t j) const;

    bool is_square() const { return rows() == cols(); }
    bool is_symmetric() const;
    /// Skew-symmetric with zero diagonal.
    bool is_alternating() const;
    /// Every entry a constant (no x, y, z, t factors).
    bool is_constant() const;

    PolyMatrix transpose() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;

    /// Entrywise specialization into Q[x,y,z].
    PolyMatrix specialize(const TAssignment& assignment) const;

    std::string str() const;

private:
    RingDesc ring_;
    std::vector<Label> row_labels_, col_labels_;
    std::vector<Polynomial> entries_; // row-major
};

/// Exact determinant. Constant matrices go through fraction-free Bareiss
/// elimination; polynomial matrices go through memoized cofactor expansion,
/// which in a generic ring is guarded to size <= 6 (CapacityError past it).
Polynomial determinant(const PolyMatrix& m);

/// Cofactor-expansion determinant, usable on any entries. Exposed separately
/// so the two routes can be cross-checked.
Polynomial determinant_cofactor(const PolyMatrix& m);

/// Bareiss fraction-free determinant; entries must be constants.
Polynomial determinant_bareiss(const PolyMatrix& m);

/// Classical adjoint A with M*A = A*M = det(M)*I. Constant matrices with
/// nonzero determinant are solved by exact Gauss-Jordan elimination and
/// scaled; everything else falls back to signed cofactors.
PolyMatrix adjoint(const PolyMatrix& m);

// Exact linear algebra over the rationals.
using QMatrix = std::vector<std::vector<Rational>>;

Rational det_bareiss(QMatrix m);
int rational_rank(QMatrix m);
/// Basis of the right kernel {v : m v = 0}.
std::vector<std::vector<Rational>> rational_kernel(QMatrix m);

} // namespace gorlin

#endif // GORLIN_MATRIX_HPP
