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

#include "gorlin/divided.hpp"

#include <algorithm>

namespace gorlin {

DividedElement::DividedElement(const RingDesc& ring, int degree)
    : ring_(ring), degree_(degree) {
    if (degree < 0) throw InputError("divided element needs degree >= 0");
}

void DividedElement::add(const Monomial& m, const Polynomial& coeff) {
    if (m.degree() != degree_) {
        throw InputError("dual monomial " + m.str() + " does not have degree " +
                         std::to_string(degree_));
    }
    if (coeff.ring() != ring_) throw InputError("ring mismatch in divided element");
    if (coeff.is_zero()) return;
    if (coeff.xyz_degree() != 0) {
        throw InputError("divided-element coefficient must be free of x,y,z: " +
                         coeff.str());
    }
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
        coeffs_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void DividedElement::add(const Monomial& m, const Rational& coeff) {
    add(m, Polynomial::constant(ring_, coeff));
}

Polynomial DividedElement::coeff(const Monomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Polynomial::zero(ring_) : it->second;
}

DividedElement DividedElement::operator+(const DividedElement& o) const {
    if (ring_ != o.ring_ || degree_ != o.degree_) {
        throw InputError("divided-element sum needs matching ring and degree");
    }
    DividedElement out = *this;
    for (const auto& [m, c] : o.coeffs_) out.add(m, c);
    return out;
}

DividedElement DividedElement::operator-(const DividedElement& o) const {
    return *this + o.scaled(Rational(-1));
}

DividedElement DividedElement::scaled(const Polynomial& s) const {
    DividedElement out(ring_, degree_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : coeffs_) out.add(m, c * s);
    return out;
}

DividedElement DividedElement::scaled(const Rational& s) const {
    return scaled(Polynomial::constant(ring_, s));
}

bool DividedElement::operator==(const DividedElement& o) const {
    return ring_ == o.ring_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

Polynomial DividedElement::as_scalar() const {
    if (degree_ != 0) {
        throw DegreeError("divided element of degree " + std::to_string(degree_) +
                          " is not a scalar");
    }
    return coeff(Monomial());
}

std::string DividedElement::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        std::string cs = c.str();
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string dual = "(" + m.str() + ")*";
        if (cs == "1") {
            out += dual;
        } else if (cs.find(" + ") != std::string::npos ||
                   cs.find(" - ") != std::string::npos) {
            out += "(" + cs + ")*" + dual;
        } else {
            out += cs + "*" + dual;
        }
    }
    return out;
}

DividedElement contract(const Monomial& m, const DividedElement& nu) {
    if (m.degree() > nu.degree()) {
        throw DegreeError("cannot contract degree " + std::to_string(nu.degree()) +
                          " by degree " + std::to_string(m.degree()));
    }
    DividedElement out(nu.ring(), nu.degree() - m.degree());
    for (const auto& [dual, c] : nu.coeffs()) {
        if (m.divides(dual)) out.add(dual / m, c);
    }
    return out;
}

DividedElement contract(const Polynomial& p, const DividedElement& nu) {
    if (p.ring() != nu.ring()) throw InputError("ring mismatch in contraction");
    if (p.is_zero()) throw InputError("contraction by the zero polynomial");
    const auto deg = p.xyz_degree();
    if (!deg) throw InputError("contraction needs an x,y,z-homogeneous polynomial");
    if (*deg > nu.degree()) {
        throw DegreeError("cannot contract degree " + std::to_string(nu.degree()) +
                          " by degree " + std::to_string(*deg));
    }
    DividedElement out(nu.ring(), nu.degree() - *deg);
    for (const auto& [mono, cof] : p.split_xyz()) {
        for (const auto& [dual, c] : nu.coeffs()) {
            if (mono.divides(dual)) out.add(dual / mono, c * cof);
        }
    }
    return out;
}

InverseSystem build_phi(int n, const std::vector<std::pair<Monomial, Rational>>& coeffs) {
    if (n < 2) throw InputError("inverse system needs n >= 2");
    DividedElement phi(RingDesc::rationals(), 2 * n - 2);
    for (const auto& [m, c] : coeffs) {
        if (m.degree() != 2 * n - 2) {
            throw InputError("coefficient monomial " + m.str() +
                             " does not have degree " + std::to_string(2 * n - 2));
        }
        phi.add(m, c);
    }
    return InverseSystem{n, std::move(phi)};
}

InverseSystem generic_phi(int n) {
    if (n < 2) throw InputError("inverse system needs n >= 2");
    const RingDesc ring = RingDesc::generic(n);
    DividedElement phi(ring, 2 * n - 2);
    for (const Monomial& m : ring.tvar_monomials()) phi.add(m, Polynomial::tvar(ring, m));
    return InverseSystem{n, std::move(phi)};
}

DividedElement phi_tilde(const InverseSystem& f) {
    DividedElement out(f.phi.ring(), 2 * f.n - 1);
    for (const auto& [m, c] : f.phi.coeffs()) out.add(kX * m, c);
    return out;
}

Rational multinomial(int n, int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != n) {
        throw InputError("multinomial needs a+b+c = n with non-negative parts");
    }
    mpz_class num, d1, d2, d3;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(d1.get_mpz_t(), static_cast<unsigned long>(a));
    mpz_fac_ui(d2.get_mpz_t(), static_cast<unsigned long>(b));
    mpz_fac_ui(d3.get_mpz_t(), static_cast<unsigned long>(c));
    return Rational(num / (d1 * d2 * d3));
}

InverseSystem colon_inverse_system(int n) {
    if (n < 2) throw InputError("colon inverse system needs n >= 2");
    std::vector<std::pair<Monomial, Rational>> coeffs;
    for (const Monomial& m : monomial_basis(VarSet::xyz, n - 1)) {
        coeffs.emplace_back(Monomial(n - 1 - m.a, n - 1 - m.b, n - 1 - m.c),
                            multinomial(n - 1, m.a, m.b, m.c));
    }
    return build_phi(n, coeffs);
}

Polynomial phi_coeff(const InverseSystem& f, const Monomial& m) {
    if (m.degree() != 2 * f.n - 2) {
        throw InputError("phi coefficient index " + m.str() +
                         " does not have degree " + std::to_string(2 * f.n - 2));
    }
    return f.phi.coeff(m);
}

} // namespace gorlin
