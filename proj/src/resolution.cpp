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

#include "gorlin/resolution.hpp"

namespace gorlin {

namespace {

/// Position of y^b z^(d-b) inside the degree-d listing y^d, ..., z^d.
std::size_t yz_index(const Monomial& m, int degree) {
    return static_cast<std::size_t>(degree - m.b);
}

int choose2(int n) { return n * (n + 1) / 2; } // C(n+1, 2)

} // namespace

std::vector<Label> b1_basis(int n) {
    std::vector<Label> out = dual_labels(monomial_basis(VarSet::yz, n - 1));
    for (const auto& l : sym_labels(monomial_basis(VarSet::yz, n))) out.push_back(l);
    return out;
}

std::vector<Label> b2_basis(int n) {
    std::vector<Label> out = sym_labels(monomial_basis(VarSet::yz, n - 1));
    for (const auto& l : dual_labels(monomial_basis(VarSet::yz, n))) out.push_back(l);
    return out;
}

PolyMatrix build_b1(const Catalecticant& cat, const InverseSystem& f) {
    const int n = cat.n;
    const RingDesc& ring = cat.ring();
    const Polynomial x = Polynomial::variable(ring, 'x');
    PolyMatrix out(ring, sym_labels({Monomial()}), b1_basis(n));
    const auto inner = monomial_basis(VarSet::xyz, n - 2);
    for (std::size_t j = 0; j < out.cols(); ++j) {
        const Label& lab = out.col_labels()[j];
        if (lab.dual) {
            out.at(0, j) = x * cat.lambda.at(lab.m);
        } else {
            Polynomial acc = cat.delta * Polynomial::monomial(ring, lab.m);
            for (const Monomial& m1 : inner) {
                acc -= x * cat.lambda.at(kX * m1) * phi_coeff(f, m1 * lab.m);
            }
            out.at(0, j) = std::move(acc);
        }
    }
    return out;
}

PolyMatrix build_b2(const Catalecticant& cat, const InverseSystem& f) {
    const int n = cat.n;
    const RingDesc& ring = cat.ring();
    const Polynomial x = Polynomial::variable(ring, 'x');
    const Polynomial y = Polynomial::variable(ring, 'y');
    const Polynomial z = Polynomial::variable(ring, 'z');

    const auto rows = b1_basis(n);
    const auto cols = b2_basis(n);
    const auto dual_rows = monomial_basis(VarSet::yz, n - 1); // rows 0..n-1
    const auto sym_rows = monomial_basis(VarSet::yz, n);      // rows n..2n
    const auto inner = monomial_basis(VarSet::xyz, n - 2);
    const std::size_t nd = dual_rows.size();

    const auto sym_row = [&](const Monomial& m) { return nd + yz_index(m, n); };
    const auto dual_row = [&](const Monomial& m) { return yz_index(m, n - 1); };

    PolyMatrix out(ring, rows, cols);

    // Columns over the degree-(n-1) monomials in y,z.
    for (std::size_t j = 0; j < nd; ++j) {
        const Monomial m2 = cols[j].m;
        for (const Monomial& m1 : dual_rows) {
            Polynomial::Accumulator acc(ring);
            for (const Monomial& w1 : inner) {
                for (const Monomial& w2 : inner) {
                    const Polynomial det2 =
                        phi_coeff(f, m1 * w1 * kY) * phi_coeff(f, m2 * w2 * kZ) -
                        phi_coeff(f, m1 * w1 * kZ) * phi_coeff(f, m2 * w2 * kY);
                    if (!det2.is_zero()) {
                        acc.add_product(cat.q_entry(kX * w1, kX * w2), det2);
                    }
                }
            }
            out.at(dual_row(m1), j) = x * acc.take();
        }
        for (const Monomial& m1 : sym_rows) {
            Polynomial acc = Polynomial::zero(ring);
            for (const Monomial& w : inner) {
                if (m1.b > 0) {
                    acc += cat.q_entry(m1 / kY, kX * w) * phi_coeff(f, w * m2 * kZ);
                }
                if (m1.c > 0) {
                    acc -= cat.q_entry(m1 / kZ, kX * w) * phi_coeff(f, w * m2 * kY);
                }
            }
            out.at(sym_row(m1), j) = x * acc;
        }
        out.at(sym_row(kZ * m2), j) += y * cat.delta;
        out.at(sym_row(kY * m2), j) -= z * cat.delta;
    }

    // Columns over the duals of the degree-n monomials in y,z.
    for (std::size_t jj = 0; jj < sym_rows.size(); ++jj) {
        const std::size_t j = nd + jj;
        const Monomial m2 = cols[j].m;
        if (m2.c > 0) {
            const Monomial w = m2 / kZ;
            for (const Monomial& row : dual_rows) {
                Polynomial acc = Polynomial::zero(ring);
                for (const Monomial& mp : inner) {
                    acc += phi_coeff(f, kY * row * mp) * cat.q_entry(kX * mp, w);
                }
                out.at(dual_row(row), j) += x * acc;
            }
            out.at(dual_row(w), j) -= y * cat.delta;
            for (const Monomial& row : dual_rows) {
                out.at(sym_row(kY * row), j) += x * cat.q_entry(row, w);
            }
        }
        if (m2.b > 0) {
            const Monomial v = m2 / kY;
            for (const Monomial& row : dual_rows) {
                Polynomial acc = Polynomial::zero(ring);
                for (const Monomial& mp : inner) {
                    acc += phi_coeff(f, kZ * row * mp) * cat.q_entry(kX * mp, v);
                }
                out.at(dual_row(row), j) -= x * acc;
            }
            out.at(dual_row(v), j) += z * cat.delta;
            for (const Monomial& row : dual_rows) {
                out.at(sym_row(kZ * row), j) -= x * cat.q_entry(row, v);
            }
        }
    }

    return out;
}

PolyMatrix build_b3(const PolyMatrix& b1, int n) {
    const RingDesc& ring = b1.ring();
    const auto rows = b2_basis(n);
    PolyMatrix out(ring, rows, sym_labels({Monomial()}));
    const std::size_t nd = static_cast<std::size_t>(n); // dual block size in b1
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Label& lab = rows[i];
        if (lab.dual) {
            out.at(i, 0) = b1.at(0, nd + yz_index(lab.m, n));
        } else {
            out.at(i, 0) = b1.at(0, yz_index(lab.m, n - 1));
        }
    }
    return out;
}

PolyMatrix b2_pairing_oracle(const Catalecticant& cat, const InverseSystem& f) {
    const int n = cat.n;
    const RingDesc& ring = cat.ring();
    const Polynomial x = Polynomial::variable(ring, 'x');
    const Polynomial y = Polynomial::variable(ring, 'y');
    const Polynomial z = Polynomial::variable(ring, 'z');
    const DividedElement lift = phi_tilde(f);

    const auto basis = b2_basis(n);
    const std::size_t r = basis.size();

    // Per basis element: the two degree-(n-1) contractions feeding the
    // pairing, plus the raw dual element for the scalar delta terms.
    struct Prepared {
        bool dual = false;
        Monomial m;
        DividedElement with_y;
        DividedElement with_z;
        DividedElement raw; // dual elements only
    };
    std::vector<Prepared> prep;
    prep.reserve(r);
    for (const Label& lab : basis) {
        if (lab.dual) {
            DividedElement nu(ring, n);
            nu.add(lab.m, Rational(1));
            prep.push_back(Prepared{true, lab.m, contract(kY, nu), contract(kZ, nu), nu});
        } else {
            prep.push_back(Prepared{false, lab.m, contract(kY * lab.m, lift),
                                    contract(kZ * lab.m, lift), DividedElement(ring, n)});
        }
    }

    const auto scalar = [&](const Monomial& mono, const DividedElement& nu) {
        return contract(mono, nu).as_scalar();
    };

    PolyMatrix out(ring, b1_basis(n), basis);
    for (std::size_t jcol = 0; jcol < r; ++jcol) {
        const Prepared& a = prep[jcol]; // first wedge argument
        for (std::size_t irow = 0; irow < r; ++irow) {
            const Prepared& b = prep[irow]; // second wedge argument
            Polynomial value = Polynomial::zero(ring);
            if (!a.dual && !b.dual) {
                value = x * (qq_pair(cat, a.with_z, b.with_y) -
                             qq_pair(cat, a.with_y, b.with_z));
            } else if (!a.dual && b.dual) {
                value = x * (qq_pair(cat, a.with_z, b.with_y) -
                             qq_pair(cat, a.with_y, b.with_z));
                value += y * cat.delta * scalar(kZ * a.m, b.raw);
                value -= z * cat.delta * scalar(kY * a.m, b.raw);
            } else if (a.dual && !b.dual) {
                value = -(x * (qq_pair(cat, b.with_z, a.with_y) -
                               qq_pair(cat, b.with_y, a.with_z)));
                value -= y * cat.delta * scalar(kZ * b.m, a.raw);
                value += z * cat.delta * scalar(kY * b.m, a.raw);
            } else {
                value = x * (qq_pair(cat, a.with_z, b.with_y) -
                             qq_pair(cat, a.with_y, b.with_z));
            }
            out.at(irow, jcol) = std::move(value);
        }
    }
    return out;
}

BiDegree ResolutionComplex::expected_b1_bidegree(std::size_t col) const {
    return BiDegree{-twist_b1[col].d1, -twist_b1[col].d2};
}

BiDegree ResolutionComplex::expected_b2_bidegree(std::size_t row, std::size_t col) const {
    return BiDegree{twist_b1[row].d1 - twist_b2[col].d1,
                    twist_b1[row].d2 - twist_b2[col].d2};
}

BiDegree ResolutionComplex::expected_b3_bidegree(std::size_t row) const {
    return BiDegree{twist_b2[row].d1 - twist_b3.d1, twist_b2[row].d2 - twist_b3.d2};
}

ResolutionComplex build_resolution(const InverseSystem& f) {
    if (f.n < 2) throw InputError("resolution needs n >= 2");
    if (f.is_generic() && f.n > 3) {
        throw CapacityError("generic resolutions are supported for n <= 3; got n = " +
                            std::to_string(f.n));
    }
    Catalecticant cat = catalecticant(f);
    if (!f.is_generic() && cat.delta.is_zero()) {
        throw DegenerateInverseSystem(
            "catalecticant determinant vanishes: no linear resolution");
    }
    const int n = f.n;
    const int top = choose2(n);
    ResolutionComplex r{n,
                        f,
                        cat,
                        build_b1(cat, f),
                        build_b2(cat, f),
                        PolyMatrix(cat.ring(), {}, {}),
                        BiDegree{0, 0},
                        {},
                        {},
                        BiDegree{-2 * n - 1, -3 * top + 1}};
    r.b3 = build_b3(r.b1, n);
    for (int i = 0; i < n; ++i) r.twist_b1.push_back(BiDegree{-n, -top + 1});
    for (int i = 0; i < n + 1; ++i) r.twist_b1.push_back(BiDegree{-n, -top});
    for (int i = 0; i < n; ++i) r.twist_b2.push_back(BiDegree{-n - 1, -2 * top});
    for (int i = 0; i < n + 1; ++i) r.twist_b2.push_back(BiDegree{-n - 1, -2 * top + 1});
    return r;
}

} // namespace gorlin
