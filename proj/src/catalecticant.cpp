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

#include "gorlin/catalecticant.hpp"

namespace gorlin {

PolyMatrix cat_matrix(const InverseSystem& f) {
    const auto basis = monomial_basis(VarSet::xyz, f.n - 1);
    PolyMatrix t(f.phi.ring(), sym_labels(basis), sym_labels(basis));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            Polynomial e = phi_coeff(f, basis[i] * basis[j]);
            t.at(i, j) = e;
            if (i != j) t.at(j, i) = std::move(e);
        }
    }
    return t;
}

std::size_t Catalecticant::index(const Monomial& m) const {
    const auto& labels = T.row_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].m == m) return i;
    }
    throw InputError("monomial " + m.str() + " is not in the degree-" +
                     std::to_string(n - 1) + " basis");
}

const Polynomial& Catalecticant::q_entry(const Monomial& m1, const Monomial& m2) const {
    return Q.at(index(m1), index(m2));
}

Catalecticant catalecticant(const InverseSystem& f) {
    Catalecticant cat{f.n, cat_matrix(f), Polynomial(), PolyMatrix(f.phi.ring(), {}, {}),
                      {}};
    cat.delta = determinant(cat.T);
    cat.Q = adjoint(cat.T);
    const RingDesc& ring = cat.ring();
    for (std::size_t j = 0; j < cat.T.cols(); ++j) {
        Polynomial l = Polynomial::zero(ring);
        for (std::size_t i = 0; i < cat.T.rows(); ++i) {
            l += Polynomial::monomial(ring, cat.T.row_labels()[i].m) * cat.Q.at(i, j);
        }
        cat.lambda.emplace(cat.T.col_labels()[j].m, std::move(l));
    }
    return cat;
}

std::map<Monomial, Polynomial> lambdas(const Catalecticant& cat) { return cat.lambda; }

Polynomial q_apply(const Catalecticant& cat, const DividedElement& nu) {
    if (nu.ring() != cat.ring()) throw InputError("ring mismatch in q");
    if (nu.degree() != cat.n - 1) {
        throw DegreeError("q acts on degree " + std::to_string(cat.n - 1) +
                          ", got degree " + std::to_string(nu.degree()));
    }
    Polynomial out = Polynomial::zero(cat.ring());
    for (const auto& [m2, c] : nu.coeffs()) out += c * cat.lambda.at(m2);
    return out;
}

Polynomial qq_pair(const Catalecticant& cat, const DividedElement& nu1,
                   const DividedElement& nu2) {
    if (nu1.ring() != cat.ring() || nu2.ring() != cat.ring()) {
        throw InputError("ring mismatch in pairing");
    }
    if (nu1.degree() != cat.n - 1 || nu2.degree() != cat.n - 1) {
        throw DegreeError("pairing needs two degree-" + std::to_string(cat.n - 1) +
                          " elements");
    }
    Polynomial::Accumulator acc(cat.ring());
    for (const auto& [m1, c1] : nu1.coeffs()) {
        const std::size_t i = cat.index(m1);
        for (const auto& [m2, c2] : nu2.coeffs()) {
            acc.add_product(c1 * c2, cat.Q.at(i, cat.index(m2)));
        }
    }
    return acc.take();
}

} // namespace gorlin
