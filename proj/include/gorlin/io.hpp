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

#ifndef GORLIN_IO_HPP
#define GORLIN_IO_HPP

#include <string>

#include <json.hpp>

#include "gorlin/resolution.hpp"
#include "gorlin/verify.hpp"

namespace gorlin {

/// Input schema:
///   {"n": 3, "coefficients": [{"exponents": [2,2,0], "value": "1"}, ...]}
/// Values are decimal integers or "p/q" strings (JSON integers also work).
/// Duplicate exponent triples are rejected.
InverseSystem inverse_system_from_json(const nlohmann::json& j);
InverseSystem load_inverse_system(const std::string& path);
nlohmann::json inverse_system_to_json(const InverseSystem& f);

nlohmann::json matrix_to_json(const PolyMatrix& m);

nlohmann::json resolution_to_json(const ResolutionComplex& r);
std::string resolution_to_text(const ResolutionComplex& r);

nlohmann::json report_to_json(const VerificationReport& rep, bool timings);
std::string report_to_text(const VerificationReport& rep, bool timings);

} // namespace gorlin

#endif // GORLIN_IO_HPP
