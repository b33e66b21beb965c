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

#ifndef GORLIN_FIXTURES_HPP
#define GORLIN_FIXTURES_HPP

#include "gorlin/divided.hpp"
#include "gorlin/matrix.hpp"

namespace gorlin {

/// A built-in n = 3 inverse system together with its known-good
/// catalecticant data and differentials. Used as regression anchors by the
/// CLI `examples` subcommand and by the test suites.
struct ExampleFixture {
    const char* name;
    std::vector<std::pair<Monomial, long>> phi;
    long delta;
    long T[6][6];
    long Q[6][6];
    const char* b1[7];
    const char* b2[7][7];
};

const std::vector<ExampleFixture>& example_fixtures();

std::vector<std::pair<Monomial, Rational>> fixture_phi_coeffs(const ExampleFixture& fx);
InverseSystem fixture_system(const ExampleFixture& fx);

struct FixtureDiff {
    bool ok = true;
    std::string details; // per-piece summary, mismatches spelled out
};

/// Rebuild everything from the fixture's coefficients and compare against
/// the embedded values, entry by entry.
FixtureDiff check_fixture(const ExampleFixture& fx);

} // namespace gorlin

#endif // GORLIN_FIXTURES_HPP
