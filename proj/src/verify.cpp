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

#include "gorlin/verify.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>

#include "gorlin/fixtures.hpp"

namespace gorlin {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckResult timed(const std::string& name,
                  const std::function<std::pair<bool, std::string>()>& body) {
    Stopwatch sw;
    auto [pass, witness] = body();
    return CheckResult{name, pass, std::move(witness), sw.millis()};
}

/// Rows of rational coordinates over the degree-d monomial basis.
QMatrix forms_to_rows(const std::vector<Polynomial>& forms, int degree) {
    const auto basis = monomial_basis(VarSet::xyz, degree);
    QMatrix rows;
    rows.reserve(forms.size());
    for (const auto& f : forms) {
        std::vector<Rational> row;
        row.reserve(basis.size());
        for (const auto& m : basis) row.push_back(f.coefficient(m));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<std::string> span_mismatch(const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b, int degree) {
    QMatrix ra = forms_to_rows(a, degree);
    QMatrix rb = forms_to_rows(b, degree);
    QMatrix all = ra;
    all.insert(all.end(), rb.begin(), rb.end());
    const int rank_a = rational_rank(ra);
    const int rank_b = rational_rank(rb);
    const int rank_all = rational_rank(all);
    if (rank_a == rank_b && rank_b == rank_all) return std::nullopt;
    return "rank(first) = " + std::to_string(rank_a) +
           ", rank(second) = " + std::to_string(rank_b) +
           ", rank(union) = " + std::to_string(rank_all);
}

std::pair<bool, std::string> matrix_is_zero(const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_zero()) {
                return {false, "nonzero entry at (" + std::to_string(i) + "," +
                                   std::to_string(j) + "): " + m.at(i, j).str()};
            }
        }
    }
    return {true, ""};
}

} // namespace

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void VerificationReport::merge(const VerificationReport& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
}

Polynomial poly_pow(const Polynomial& p, int k) {
    if (k < 0) throw InputError("negative power");
    Polynomial out = Polynomial::constant(p.ring(), Rational(1));
    for (int i = 0; i < k; ++i) out *= p;
    return out;
}

std::vector<Polynomial> annihilator_degree_n(const InverseSystem& f) {
    if (f.is_generic()) {
        throw InputError("annihilator oracle runs on specialized systems only");
    }
    const int n = f.n;
    const auto top = monomial_basis(VarSet::xyz, n);
    const auto bottom = monomial_basis(VarSet::xyz, n - 2);
    QMatrix a(bottom.size(), std::vector<Rational>(top.size()));
    for (std::size_t r = 0; r < bottom.size(); ++r)
        for (std::size_t c = 0; c < top.size(); ++c)
            a[r][c] = phi_coeff(f, top[c] * bottom[r]).constant_value();
    std::vector<Polynomial> out;
    for (const auto& v : rational_kernel(std::move(a))) {
        Polynomial g = Polynomial::zero(f.phi.ring());
        for (std::size_t c = 0; c < top.size(); ++c) {
            if (v[c] != 0) g += Polynomial::monomial(f.phi.ring(), top[c], v[c]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

CheckResult check_b1_annihilates(const ResolutionComplex& r, const InverseSystem& f) {
    return timed("annihilator-span", [&]() -> std::pair<bool, std::string> {
        const int n = f.n;
        std::vector<Polynomial> gens;
        for (std::size_t j = 0; j < r.b1.cols(); ++j) {
            const Polynomial& g = r.b1.at(0, j);
            if (g.is_zero()) {
                return {false, "b1 entry at " + r.b1.col_labels()[j].str() + " is zero"};
            }
            if (!contract(g, f.phi).is_zero()) {
                return {false, "b1 entry at " + r.b1.col_labels()[j].str() +
                                   " does not annihilate phi: " + g.str()};
            }
            gens.push_back(g);
        }
        const auto ann = annihilator_degree_n(f);
        if (ann.size() != static_cast<std::size_t>(2 * n + 1)) {
            return {false, "annihilator dimension " + std::to_string(ann.size()) +
                               " != " + std::to_string(2 * n + 1)};
        }
        if (auto bad = span_mismatch(gens, ann, n)) {
            return {false, "b1 span differs from annihilator kernel: " + *bad};
        }
        return {true, "dimension " + std::to_string(ann.size())};
    });
}

namespace {

class PfaffianExpansion {
public:
    PfaffianExpansion(const PolyMatrix& m, std::vector<std::size_t> idx)
        : m_(m), idx_(std::move(idx)), memo_(std::size_t(1) << idx_.size()) {}

    Polynomial run() { return pf((1u << idx_.size()) - 1u); }

private:
    Polynomial pf(unsigned mask) {
        if (mask == 0) return Polynomial::constant(m_.ring(), Rational(1));
        auto& slot = memo_[mask];
        if (slot) return *slot;
        const unsigned first = static_cast<unsigned>(__builtin_ctz(mask));
        Polynomial acc = Polynomial::zero(m_.ring());
        int pos = 0;
        for (unsigned k = first + 1; k < idx_.size(); ++k) {
            if (!(mask & (1u << k))) continue;
            const Polynomial& e = m_.at(idx_[first], idx_[k]);
            if (!e.is_zero()) {
                Polynomial sub = pf(mask & ~(1u << first) & ~(1u << k));
                Polynomial piece = e * sub;
                acc += (pos % 2 == 0) ? piece : -piece;
            }
            ++pos;
        }
        slot = std::move(acc);
        return *slot;
    }

    const PolyMatrix& m_;
    std::vector<std::size_t> idx_;
    std::vector<std::optional<Polynomial>> memo_;
};

} // namespace

Polynomial pfaffian(const PolyMatrix& m, const std::vector<std::size_t>& subset) {
    if (!m.is_square()) throw ShapeError("Pfaffian needs a square matrix");
    if (subset.size() % 2 != 0) throw InputError("Pfaffian needs an even index subset");
    if (subset.size() > 20) throw CapacityError("Pfaffian subset too large");
    for (std::size_t a = 0; a < subset.size(); ++a) {
        if (subset[a] >= m.rows()) throw InputError("Pfaffian index out of range");
        if (!m.at(subset[a], subset[a]).is_zero()) {
            throw InputError("Pfaffian needs zero diagonal");
        }
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            if (subset[a] == subset[b]) throw InputError("repeated Pfaffian index");
            if (m.at(subset[a], subset[b]) != -m.at(subset[b], subset[a])) {
                throw InputError("Pfaffian needs an alternating matrix");
            }
        }
    }
    if (subset.empty()) return Polynomial::constant(m.ring(), Rational(1));
    return PfaffianExpansion(m, subset).run();
}

Polynomial pfaffian(const PolyMatrix& m) {
    std::vector<std::size_t> all(m.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return pfaffian(m, all);
}

CheckResult check_pfaffian_span(const ResolutionComplex& r) {
    return timed("pfaffian-span", [&]() -> std::pair<bool, std::string> {
        const int n = r.n;
        const std::size_t size = r.b2.rows();
        std::vector<Polynomial> pfs;
        for (std::size_t drop = 0; drop < size; ++drop) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < size; ++i)
                if (i != drop) keep.push_back(i);
            pfs.push_back(pfaffian(r.b2, keep));
        }
        std::vector<Polynomial> gens;
        for (std::size_t j = 0; j < r.b1.cols(); ++j) gens.push_back(r.b1.at(0, j));
        if (auto bad = span_mismatch(pfs, gens, n)) {
            return {false, "Pfaffian span differs from b1 span: " + *bad};
        }
        // Entrywise proportionality is informative only; no fixed unit is
        // required between b1 and the Pfaffian vector.
        std::string note = "spans agree";
        bool proportional = true;
        std::vector<std::string> ratios;
        for (std::size_t i = 0; i < size; ++i) {
            const Polynomial& g = r.b1.at(0, i);
            const Polynomial& p = pfs[i];
            if (p.is_zero() || g.is_zero()) {
                proportional = false;
                break;
            }
            const Rational cg = g.terms().front().coeff;
            const Rational cp = p.terms().front().coeff;
            if (g * cp != p * cg) {
                proportional = false;
                break;
            }
            ratios.push_back(Rational(cg / cp).get_str());
        }
        if (proportional) {
            note += "; entrywise ratios b1/Pf = [";
            for (std::size_t i = 0; i < ratios.size(); ++i) {
                if (i) note += ", ";
                note += ratios[i];
            }
            note += "]";
        } else {
            note += "; not entrywise proportional";
        }
        return {true, note};
    });
}

bool in_power_ideal(const Polynomial& f, int n) {
    for (const auto& [m, cof] : f.split_xyz()) {
        (void)cof;
        if (m.a < n && m.b < n && m.c < n) return false;
    }
    return true;
}

VerificationReport check_colon_ideal(int n) {
    VerificationReport rep;
    const InverseSystem f = colon_inverse_system(n);
    ResolutionComplex r;
    try {
        r = build_resolution(f);
    } catch (const Error& e) {
        rep.add(CheckResult{"colon-resolution", false, e.what(), 0.0});
        return rep;
    }
    rep.add(CheckResult{"colon-resolution", true, "delta = " + r.cat.delta.str(), 0.0});

    rep.add(timed("colon-membership", [&]() -> std::pair<bool, std::string> {
        const RingDesc& ring = r.ring();
        const Polynomial shift = poly_pow(Polynomial::variable(ring, 'x') +
                                              Polynomial::variable(ring, 'y') +
                                              Polynomial::variable(ring, 'z'),
                                          n - 1);
        for (std::size_t j = 0; j < r.b1.cols(); ++j) {
            const Polynomial h = r.b1.at(0, j) * shift;
            if (!in_power_ideal(h, n)) {
                return {false, "generator at " + r.b1.col_labels()[j].str() +
                                   " leaves the power ideal"};
            }
        }
        return {true, std::to_string(r.b1.cols()) + " generators checked"};
    }));

    rep.add(check_b1_annihilates(r, f));

    if (n == 3) {
        rep.add(timed("colon-closed-form", [&]() -> std::pair<bool, std::string> {
            const auto& fx = example_fixtures().at(3);
            const InverseSystem expected = build_phi(3, fixture_phi_coeffs(fx));
            if (f.phi != expected.phi) {
                return {false, "colon system differs from the embedded degree-4 form"};
            }
            return {true, ""};
        }));
        rep.add(timed("colon-cube-combination", [&]() -> std::pair<bool, std::string> {
            // (y^2)* + 2 (yz)* + (z^2)* maps to 54 x^3.
            const Polynomial got =
                r.b1.at(0, 0) + r.b1.at(0, 1) * Rational(2) + r.b1.at(0, 2);
            const Polynomial want =
                Polynomial::monomial(r.ring(), Monomial(3, 0, 0), Rational(54));
            if (got != want) return {false, "combination gives " + got.str()};
            return {true, got.str()};
        }));
    }
    return rep;
}

VerificationReport full_report(const InverseSystem& f) {
    VerificationReport rep;
    const bool specialized = !f.is_generic();
    ResolutionComplex r;
    {
        Stopwatch sw;
        try {
            r = build_resolution(f);
        } catch (const DegenerateInverseSystem& e) {
            rep.add(CheckResult{"delta-nonzero", false, e.what(), sw.millis()});
            return rep;
        }
        if (specialized) {
            rep.add(CheckResult{"delta-nonzero", true, "delta = " + r.cat.delta.str(),
                                sw.millis()});
        }
    }

    rep.add(timed("complex-b1b2", [&] { return matrix_is_zero(r.b1 * r.b2); }));
    rep.add(timed("complex-b2b3", [&] { return matrix_is_zero(r.b2 * r.b3); }));

    rep.add(timed("alternating-b2", [&]() -> std::pair<bool, std::string> {
        if (r.b2.is_alternating()) return {true, ""};
        return {false, "b2 is not alternating with zero diagonal"};
    }));

    rep.add(timed("grading", [&]() -> std::pair<bool, std::string> {
        const bool both = !specialized;
        auto check_entry = [&](const Polynomial& e, const BiDegree& want,
                               const std::string& where) -> std::optional<std::string> {
            if (e.is_zero()) return std::nullopt;
            const auto d = e.bidegree();
            if (!d) return where + " is not bihomogeneous: " + e.str();
            if (d->d1 != want.d1 || (both && d->d2 != want.d2)) {
                return where + " has bidegree " + d->str() + ", twists force " +
                       want.str();
            }
            return std::nullopt;
        };
        for (std::size_t j = 0; j < r.b1.cols(); ++j) {
            if (auto bad = check_entry(r.b1.at(0, j), r.expected_b1_bidegree(j),
                                       "b1[" + std::to_string(j) + "]"))
                return {false, *bad};
        }
        for (std::size_t i = 0; i < r.b2.rows(); ++i) {
            for (std::size_t j = 0; j < r.b2.cols(); ++j) {
                if (auto bad = check_entry(r.b2.at(i, j), r.expected_b2_bidegree(i, j),
                                           "b2[" + std::to_string(i) + "," +
                                               std::to_string(j) + "]"))
                    return {false, *bad};
            }
        }
        for (std::size_t i = 0; i < r.b3.rows(); ++i) {
            if (auto bad = check_entry(r.b3.at(i, 0), r.expected_b3_bidegree(i),
                                       "b3[" + std::to_string(i) + "]"))
                return {false, *bad};
        }
        return {true, ""};
    }));

    rep.add(timed("b3-reindex", [&]() -> std::pair<bool, std::string> {
        const std::size_t nd = static_cast<std::size_t>(r.n);
        for (std::size_t i = 0; i < r.b3.rows(); ++i) {
            const Label& lab = r.b3.row_labels()[i];
            const std::size_t src = lab.dual
                                        ? nd + static_cast<std::size_t>(r.n - lab.m.b)
                                        : static_cast<std::size_t>(r.n - 1 - lab.m.b);
            if (r.b3.at(i, 0) != r.b1.at(0, src)) {
                return {false, "b3 row " + lab.str() + " does not mirror b1"};
            }
        }
        return {true, ""};
    }));

    rep.add(timed("oracle-b2-agreement", [&]() -> std::pair<bool, std::string> {
        const PolyMatrix oracle = b2_pairing_oracle(r.cat, f);
        for (std::size_t i = 0; i < oracle.rows(); ++i) {
            for (std::size_t j = 0; j < oracle.cols(); ++j) {
                if (oracle.at(i, j) != r.b2.at(i, j)) {
                    return {false, "pairing route disagrees at (" + std::to_string(i) +
                                       "," + std::to_string(j) + "): " +
                                       oracle.at(i, j).str() + " vs " +
                                       r.b2.at(i, j).str()};
                }
            }
        }
        return {true, ""};
    }));

    if (specialized) {
        rep.add(check_b1_annihilates(r, f));
        rep.add(check_pfaffian_span(r));
        rep.add(timed("pfaffian-det-consistency", [&]() -> std::pair<bool, std::string> {
            for (std::size_t drop = 0; drop < r.b2.rows(); ++drop) {
                std::vector<std::size_t> keep;
                std::vector<Label> labels;
                for (std::size_t i = 0; i < r.b2.rows(); ++i)
                    if (i != drop) keep.push_back(i);
                PolyMatrix minor(r.ring(), std::vector<Label>(keep.size()),
                                 std::vector<Label>(keep.size()));
                for (std::size_t a = 0; a < keep.size(); ++a)
                    for (std::size_t b = 0; b < keep.size(); ++b)
                        minor.at(a, b) = r.b2.at(keep[a], keep[b]);
                const Polynomial pf = pfaffian(r.b2, keep);
                if (pf * pf != determinant_cofactor(minor)) {
                    return {false,
                            "Pf^2 != det for deleted index " + std::to_string(drop)};
                }
            }
            return {true, ""};
        }));
    }
    return rep;
}

InverseSystem random_phi(int n, std::uint64_t seed, int bound) {
    if (n < 2) throw InputError("random system needs n >= 2");
    if (bound < 1) throw InputError("random system needs bound >= 1");
    std::mt19937_64 eng(seed);
    std::uniform_int_distribution<int> draw(-bound, bound);
    const auto basis = monomial_basis(VarSet::xyz, 2 * n - 2);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<Monomial, Rational>> coeffs;
        for (const auto& m : basis) {
            const int v = draw(eng);
            if (v != 0) coeffs.emplace_back(m, Rational(v));
        }
        InverseSystem f = build_phi(n, coeffs);
        if (!determinant(cat_matrix(f)).is_zero()) return f;
    }
    throw InputError("could not draw a nondegenerate system");
}

} // namespace gorlin
