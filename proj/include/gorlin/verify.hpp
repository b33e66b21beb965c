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

#ifndef GORLIN_VERIFY_HPP
#define GORLIN_VERIFY_HPP

#include "gorlin/resolution.hpp"

namespace gorlin {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // concrete offender on failure, context on success
    double millis = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const VerificationReport& o);
};

/// p^k by repeated multiplication, k >= 0.
Polynomial poly_pow(const Polynomial& p, int k);

/// Basis of the degree-n part of the annihilator of a specialized inverse
/// system: the kernel of contraction from degree-n forms into the
/// degree-(n-2) divided module, by exact rational elimination.
std::vector<Polynomial> annihilator_degree_n(const InverseSystem& f);

/// Every b1 entry kills phi, and the b1 entries span exactly the degree-n
/// annihilator (dimension 2n+1 when delta != 0).
CheckResult check_b1_annihilates(const ResolutionComplex& r, const InverseSystem& f);

/// Pfaffian of an alternating matrix restricted to the given row/column
/// subset, by expansion along the first remaining index; Pf [[0,a],[-a,0]] = a.
/// InputError for odd subsets or non-alternating input.
Polynomial pfaffian(const PolyMatrix& m, const std::vector<std::size_t>& subset);
Polynomial pfaffian(const PolyMatrix& m);

/// The 2n+1 maximal-order Pfaffians of b2 span the same degree-n space as
/// the b1 entries; entrywise proportionality is reported, not required.
CheckResult check_pfaffian_span(const ResolutionComplex& r);

/// Every term of f is divisible by x^n, y^n or z^n.
bool in_power_ideal(const Polynomial& f, int n);

/// Build the colon inverse system for (x^n,y^n,z^n):(x+y+z)^(n-1), resolve
/// it, and verify the generator membership g (x+y+z)^(n-1) in (x^n,y^n,z^n)
/// term by term plus the degree-n annihilator span. For n = 3 also checks
/// the known closed form and the 54 x^3 combination.
VerificationReport check_colon_ideal(int n);

/// Aggregate run: complex property, alternating b2, grading, b3 reindexing,
/// pairing-oracle agreement, and (specialized mode only) annihilator span,
/// Pfaffian span and Pfaffian/determinant consistency. A degenerate
/// specialized system yields a single failing entry.
VerificationReport full_report(const InverseSystem& f);

/// Deterministic pseudo-random specialized system with integer coefficients
/// in [-bound, bound], redrawn until the catalecticant determinant is
/// nonzero. Same seed, same system.
InverseSystem random_phi(int n, std::uint64_t seed, int bound = 9);

} // namespace gorlin

#endif // GORLIN_VERIFY_HPP
