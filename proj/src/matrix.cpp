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

#include "gorlin/matrix.hpp"

#include <optional>

namespace gorlin {

std::vector<Label> sym_labels(const std::vector<Monomial>& ms) {
    std::vector<Label> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(Label{m, false});
    return out;
}

std::vector<Label> dual_labels(const std::vector<Monomial>& ms) {
    std::vector<Label> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(Label{m, true});
    return out;
}

PolyMatrix::PolyMatrix(const RingDesc& ring, std::vector<Label> row_labels,
                       std::vector<Label> col_labels)
    : ring_(ring), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      entries_(row_labels_.size() * col_labels_.size(), Polynomial::zero(ring)) {}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows() || j >= cols()) throw ShapeError("matrix index out of range");
    return entries_[i * cols() + j];
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols()) throw ShapeError("matrix index out of range");
    return entries_[i * cols() + j];
}

bool PolyMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = i + 1; j < cols(); ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool PolyMatrix::is_alternating() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows(); ++i) {
        if (!at(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < cols(); ++j)
            if (at(i, j) != -at(j, i)) return false;
    }
    return true;
}

bool PolyMatrix::is_constant() const {
    for (const auto& e : entries_)
        if (!e.is_constant()) return false;
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(ring_, col_labels_, row_labels_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) out.at(j, i) = at(i, j);
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (ring_ != o.ring_) throw InputError("ring mismatch in matrix product");
    if (cols() != o.rows()) throw ShapeError("matrix product shape mismatch");
    PolyMatrix out(ring_, row_labels_, o.col_labels_);
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < o.cols(); ++j) {
            Polynomial::Accumulator acc(ring_);
            for (std::size_t k = 0; k < cols(); ++k) acc.add_product(at(i, k), o.at(k, j));
            out.at(i, j) = acc.take();
        }
    }
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows() != o.rows() || cols() != o.cols()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

PolyMatrix PolyMatrix::specialize(const TAssignment& assignment) const {
    PolyMatrix out(RingDesc::rationals(), row_labels_, col_labels_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) out.at(i, j) = at(i, j).specialize(assignment);
    return out;
}

std::string PolyMatrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols(); ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

// --------------------------------------------------------------------------
// Determinants and adjoints

namespace {

QMatrix to_qmatrix(const PolyMatrix& m) {
    QMatrix q(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = m.at(i, j).constant_value();
    return q;
}

void check_cofactor_capacity(const PolyMatrix& m) {
    if (m.ring().is_generic() && m.rows() > 6) {
        throw CapacityError(
            "symbolic determinant/adjoint is supported up to size 6 (n <= 3); "
            "matrix has size " + std::to_string(m.rows()));
    }
}

/// Memoized expansion over column subsets; det of the submatrix made of the
/// last popcount(mask) rows and the columns in mask.
class CofactorDet {
public:
    explicit CofactorDet(const PolyMatrix& m)
        : m_(m), n_(m.rows()), memo_(std::size_t(1) << n_) {}

    Polynomial run() { return det(full_mask()); }

private:
    unsigned full_mask() const { return (1u << n_) - 1u; }

    Polynomial det(unsigned mask) {
        const int size = __builtin_popcount(mask);
        if (size == 0) return Polynomial::constant(m_.ring(), Rational(1));
        auto& slot = memo_[mask];
        if (slot) return *slot;
        const std::size_t row = n_ - static_cast<std::size_t>(size);
        Polynomial::Accumulator acc(m_.ring());
        int pos = 0;
        for (unsigned j = 0; j < n_; ++j) {
            if (!(mask & (1u << j))) continue;
            const Polynomial& e = m_.at(row, j);
            if (!e.is_zero()) {
                Polynomial sub = det(mask & ~(1u << j));
                if (pos % 2 == 0) {
                    acc.add_product(e, sub);
                } else {
                    acc.add_product(-e, sub);
                }
            }
            ++pos;
        }
        slot = acc.take();
        return *slot;
    }

    const PolyMatrix& m_;
    unsigned n_;
    std::vector<std::optional<Polynomial>> memo_;
};

PolyMatrix submatrix_without(const PolyMatrix& m, std::size_t drop_row,
                             std::size_t drop_col) {
    std::vector<Label> rl, cl;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (i != drop_row) rl.push_back(m.row_labels()[i]);
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j != drop_col) cl.push_back(m.col_labels()[j]);
    PolyMatrix out(m.ring(), rl, cl);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == drop_row) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j == drop_col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

} // namespace

Polynomial determinant_bareiss(const PolyMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant needs a square matrix");
    if (!m.is_constant()) throw InputError("Bareiss elimination needs constant entries");
    return Polynomial::constant(m.ring(), det_bareiss(to_qmatrix(m)));
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant needs a square matrix");
    check_cofactor_capacity(m);
    if (m.rows() == 0) return Polynomial::constant(m.ring(), Rational(1));
    return CofactorDet(m).run();
}

Polynomial determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant needs a square matrix");
    if (m.is_constant()) return determinant_bareiss(m);
    return determinant_cofactor(m);
}

namespace {

/// Inverse by Gauss-Jordan elimination; the caller guarantees det != 0.
QMatrix gauss_jordan_inverse(const QMatrix& q) {
    const std::size_t n = q.size();
    QMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = q[i][j];
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && aug[p][col] == 0) ++p;
        if (p == n) throw InputError("singular matrix in exact inverse");
        std::swap(aug[col], aug[p]);
        const Rational inv = 1 / aug[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) aug[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            const Rational f = aug[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    QMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

} // namespace

PolyMatrix adjoint(const PolyMatrix& m) {
    if (!m.is_square()) throw ShapeError("adjoint needs a square matrix");
    const std::size_t n = m.rows();
    PolyMatrix out(m.ring(), m.row_labels(), m.col_labels());
    if (n == 0) return out;
    if (m.is_constant()) {
        const QMatrix q = to_qmatrix(m);
        const Rational det = det_bareiss(q);
        if (det != 0) {
            const QMatrix inv = gauss_jordan_inverse(q);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    out.at(i, j) = Polynomial::constant(m.ring(), det * inv[i][j]);
            return out;
        }
        // det = 0 is not an error: fall back to signed cofactors, one
        // Bareiss minor each.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Polynomial minor = determinant_bareiss(submatrix_without(m, j, i));
                out.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
            }
        }
        return out;
    }
    check_cofactor_capacity(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial minor = determinant_cofactor(submatrix_without(m, j, i));
            out.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Rational elimination

Rational det_bareiss(QMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw ShapeError("determinant needs a square matrix");
    if (n == 0) return Rational(1);
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Rational(-m[n - 1][n - 1]);
}

namespace {

/// Row echelon form in place; returns pivot column per eliminated row.
std::vector<std::size_t> echelon(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rational_rank(QMatrix m) { return static_cast<int>(echelon(m).size()); }

std::vector<std::vector<Rational>> rational_kernel(QMatrix m) {
    if (m.empty()) return {};
    const std::size_t ncols = m[0].size();
    const auto pivots = echelon(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gorlin
