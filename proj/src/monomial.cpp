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

#include "gorlin/monomial.hpp"

#include "gorlin/errors.hpp"

namespace gorlin {

Monomial Monomial::operator/(const Monomial& m) const {
    if (!m.divides(*this)) {
        throw InputError("monomial quotient " + str() + " / " + m.str() +
                         " is not a monomial");
    }
    return Monomial(a - m.a, b - m.b, c - m.c);
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::string out;
    auto put = [&out](char v, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += v;
        if (e > 1) out += '^' + std::to_string(e);
    };
    put('x', a);
    put('y', b);
    put('z', c);
    return out;
}

std::vector<Monomial> monomial_basis(VarSet vars, int degree) {
    if (degree < 0) throw InputError("monomial basis needs degree >= 0");
    std::vector<Monomial> out;
    if (vars == VarSet::yz) {
        out.reserve(static_cast<std::size_t>(degree) + 1);
        for (int b = degree; b >= 0; --b) out.emplace_back(0, b, degree - b);
        return out;
    }
    out.reserve(static_cast<std::size_t>(degree + 1) * (degree + 2) / 2);
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) out.emplace_back(a, b, degree - a - b);
    return out;
}

} // namespace gorlin
