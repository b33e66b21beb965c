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

#include "gorlin/fixtures.hpp"

#include "gorlin/resolution.hpp"

namespace gorlin {

const std::vector<ExampleFixture>& example_fixtures() {
    static const std::vector<ExampleFixture> fixtures = {
        ExampleFixture{
            "example-0",
            {{{2, 2, 0}, 1}, {{1, 1, 2}, -1}, {{0, 0, 4}, 2}, {{4, 0, 0}, 1}, {{0, 4, 0}, 2}},
            -1,
            {{1, 0, 0, 1, 0, 0},
             {0, 1, 0, 0, 0, -1},
             {0, 0, 0, 0, -1, 0},
             {1, 0, 0, 2, 0, 0},
             {0, 0, -1, 0, 0, 0},
             {0, -1, 0, 0, 0, 2}},
            {{-2, 0, 0, 1, 0, 0},
             {0, -2, 0, 0, 0, -1},
             {0, 0, 0, 0, 1, 0},
             {1, 0, 0, -1, 0, 0},
             {0, 0, 1, 0, 0, 0},
             {0, -1, 0, 0, 0, -1}},
            {"x^3 - x*y^2", "x^2*z", "-x^2*y - x*z^2", "-y^3 + 4*x^2*y + 2*x*z^2",
             "-y^2*z", "-y*z^2 - 2*x^3 + x*y^2", "-z^3 - 2*x*y*z"},
            {{"0", "0", "0", "-z", "y", "0", "-2*x"},
             {"0", "0", "2*x", "x", "-z", "y", "0"},
             {"0", "-2*x", "0", "0", "-3*x", "-z", "y"},
             {"z", "-x", "0", "0", "-x", "0", "0"},
             {"-y", "z", "3*x", "x", "0", "0", "0"},
             {"0", "-y", "z", "0", "0", "0", "-x"},
             {"2*x", "0", "-y", "0", "0", "x", "0"}}},
        ExampleFixture{
            "example-1",
            {{{2, 2, 0}, 1}, {{1, 1, 2}, -1}, {{0, 0, 4}, 2}, {{4, 0, 0}, 1}},
            1,
            {{1, 0, 0, 1, 0, 0},
             {0, 1, 0, 0, 0, -1},
             {0, 0, 0, 0, -1, 0},
             {1, 0, 0, 0, 0, 0},
             {0, 0, -1, 0, 0, 0},
             {0, -1, 0, 0, 0, 2}},
            {{0, 0, 0, 1, 0, 0},
             {0, 2, 0, 0, 0, 1},
             {0, 0, 0, 0, -1, 0},
             {1, 0, 0, -1, 0, 0},
             {0, 0, -1, 0, 0, 0},
             {0, 1, 0, 0, 0, 1}},
            {"x^3 - x*y^2", "-x^2*z", "x^2*y + x*z^2", "y^3", "y^2*z",
             "y*z^2 + x*y^2", "z^3 + 2*x*y*z"},
            {{"0", "0", "0", "z", "-y", "0", "0"},
             {"0", "0", "0", "x", "z", "-y", "0"},
             {"0", "0", "0", "0", "x", "z", "-y"},
             {"-z", "-x", "0", "0", "-x", "0", "0"},
             {"y", "-z", "-x", "x", "0", "0", "0"},
             {"0", "y", "-z", "0", "0", "0", "x"},
             {"0", "0", "y", "0", "0", "-x", "0"}}},
        ExampleFixture{
            "example-2",
            {{{2, 2, 0}, 1}, {{1, 1, 2}, -1}, {{0, 0, 4}, 2}},
            1,
            {{0, 0, 0, 1, 0, 0},
             {0, 1, 0, 0, 0, -1},
             {0, 0, 0, 0, -1, 0},
             {1, 0, 0, 0, 0, 0},
             {0, 0, -1, 0, 0, 0},
             {0, -1, 0, 0, 0, 2}},
            {{0, 0, 0, 1, 0, 0},
             {0, 2, 0, 0, 0, 1},
             {0, 0, 0, 0, -1, 0},
             {1, 0, 0, 0, 0, 0},
             {0, 0, -1, 0, 0, 0},
             {0, 1, 0, 0, 0, 1}},
            {"x^3", "-x^2*z", "x^2*y + x*z^2", "y^3", "y^2*z", "y*z^2 + x*y^2",
             "z^3 + 2*x*y*z"},
            {{"0", "0", "0", "z", "-y", "0", "0"},
             {"0", "0", "0", "x", "z", "-y", "0"},
             {"0", "0", "0", "0", "x", "z", "-y"},
             {"-z", "-x", "0", "0", "0", "0", "0"},
             {"y", "-z", "-x", "0", "0", "0", "0"},
             {"0", "y", "-z", "0", "0", "0", "x"},
             {"0", "0", "y", "0", "0", "-x", "0"}}},
        ExampleFixture{
            "example-3",
            {{{0, 2, 2}, 1},
             {{2, 0, 2}, 1},
             {{2, 2, 0}, 1},
             {{1, 1, 2}, 2},
             {{1, 2, 1}, 2},
             {{2, 1, 1}, 2}},
            54,
            {{0, 0, 0, 1, 2, 1},
             {0, 1, 2, 0, 2, 2},
             {0, 2, 1, 2, 2, 0},
             {1, 0, 2, 0, 0, 1},
             {2, 2, 2, 0, 1, 0},
             {1, 2, 0, 1, 0, 0}},
            {{27, -18, -18, 9, 18, 9},
             {-18, 18, 0, -18, 0, 18},
             {-18, 0, 18, 18, 0, -18},
             {9, -18, 18, 27, -18, 9},
             {18, 0, 0, -18, 18, -18},
             {9, 18, -18, 9, -18, 27}},
            {"9*x^3 - 18*x^2*y + 18*x^2*z + 27*x*y^2 - 18*x*y*z + 9*x*z^2",
             "18*x^3 - 18*x*y^2 + 18*x*y*z - 18*x*z^2",
             "9*x^3 + 18*x^2*y - 18*x^2*z + 9*x*y^2 - 18*x*y*z + 27*x*z^2",
             "54*y^3",
             "54*y^2*z - 36*x^3 + 36*x^2*y + 18*x^2*z - 36*x*y^2 - 36*x*y*z",
             "54*y*z^2 - 36*x^3 + 18*x^2*y + 36*x^2*z - 36*x*y*z - 36*x*z^2",
             "54*z^3"},
            {{"0", "-54*x", "-36*x", "-36*x + 54*z", "-36*x - 54*y", "0", "0"},
             {"54*x", "0", "-54*x", "0", "54*z", "-54*y", "0"},
             {"36*x", "54*x", "0", "0", "0", "36*x + 54*z", "36*x - 54*y"},
             {"36*x - 54*z", "0", "0", "0", "27*x", "-18*x", "9*x"},
             {"36*x + 54*y", "-54*z", "0", "-27*x", "0", "9*x", "-18*x"},
             {"0", "54*y", "-36*x - 54*z", "18*x", "-9*x", "0", "27*x"},
             {"0", "0", "-36*x + 54*y", "-9*x", "18*x", "-27*x", "0"}}},
    };
    return fixtures;
}

std::vector<std::pair<Monomial, Rational>> fixture_phi_coeffs(const ExampleFixture& fx) {
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(fx.phi.size());
    for (const auto& [m, c] : fx.phi) out.emplace_back(m, Rational(c));
    return out;
}

InverseSystem fixture_system(const ExampleFixture& fx) {
    return build_phi(3, fixture_phi_coeffs(fx));
}

FixtureDiff check_fixture(const ExampleFixture& fx) {
    FixtureDiff diff;
    auto complain = [&diff](const std::string& s) {
        diff.ok = false;
        if (!diff.details.empty()) diff.details += "; ";
        diff.details += s;
    };

    const InverseSystem f = fixture_system(fx);
    const ResolutionComplex r = build_resolution(f);
    const RingDesc& ring = r.ring();

    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            if (r.cat.T.at(i, j).constant_value() != fx.T[i][j]) {
                complain("T(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                         r.cat.T.at(i, j).str() + ", embedded " +
                         std::to_string(fx.T[i][j]));
            }
            if (r.cat.Q.at(i, j).constant_value() != fx.Q[i][j]) {
                complain("Q(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                         r.cat.Q.at(i, j).str() + ", embedded " +
                         std::to_string(fx.Q[i][j]));
            }
        }
    }
    if (r.cat.delta.constant_value() != fx.delta) {
        complain("delta = " + r.cat.delta.str() + ", embedded " +
                 std::to_string(fx.delta));
    }
    for (std::size_t j = 0; j < 7; ++j) {
        const Polynomial want = Polynomial::parse(ring, fx.b1[j]);
        if (r.b1.at(0, j) != want) {
            complain("b1[" + r.b1.col_labels()[j].str() + "] = " + r.b1.at(0, j).str() +
                     ", embedded " + want.str());
        }
    }
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            const Polynomial want = Polynomial::parse(ring, fx.b2[i][j]);
            if (r.b2.at(i, j) != want) {
                complain("b2(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                         r.b2.at(i, j).str() + ", embedded " + want.str());
            }
        }
    }
    if (diff.ok) {
        diff.details = "T ok; Q ok; delta ok (" + std::to_string(fx.delta) +
                       "); b1 ok; b2 ok";
    }
    return diff;
}

} // namespace gorlin
