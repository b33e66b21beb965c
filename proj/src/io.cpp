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

#include "gorlin/io.hpp"

#include <fstream>
#include <set>

namespace gorlin {

using nlohmann::json;

InverseSystem inverse_system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coefficients")) {
        throw InputError("inverse system JSON needs fields \"n\" and \"coefficients\"");
    }
    if (!j["n"].is_number_integer()) throw InputError("field \"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (!j["coefficients"].is_array()) {
        throw InputError("field \"coefficients\" must be an array");
    }
    std::vector<std::pair<Monomial, Rational>> coeffs;
    std::set<std::array<int, 3>> seen;
    for (const auto& entry : j["coefficients"]) {
        if (!entry.is_object() || !entry.contains("exponents") || !entry.contains("value")) {
            throw InputError("coefficient entries need \"exponents\" and \"value\"");
        }
        const auto& e = entry["exponents"];
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer()) {
            throw InputError("\"exponents\" must be three integers");
        }
        const int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
        if (a < 0 || b < 0 || c < 0) throw InputError("exponents must be non-negative");
        if (!seen.insert({a, b, c}).second) {
            throw InputError("duplicate exponent triple [" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + "]");
        }
        Rational value;
        if (entry["value"].is_string()) {
            value = parse_rational(entry["value"].get<std::string>());
        } else if (entry["value"].is_number_integer()) {
            value = Rational(entry["value"].get<long>());
        } else {
            throw InputError("\"value\" must be a decimal integer or a \"p/q\" string");
        }
        coeffs.emplace_back(Monomial(a, b, c), value);
    }
    return build_phi(n, coeffs);
}

InverseSystem load_inverse_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("cannot parse '" + path + "': " + e.what());
    }
    return inverse_system_from_json(j);
}

nlohmann::json inverse_system_to_json(const InverseSystem& f) {
    json coeffs = json::array();
    for (const auto& [m, c] : f.phi.coeffs()) {
        json entry;
        entry["exponents"] = {m.a, m.b, m.c};
        entry["value"] = f.is_generic() ? c.str() : c.constant_value().get_str();
        coeffs.push_back(entry);
    }
    return json{{"n", f.n},
                {"mode", f.is_generic() ? "generic" : "specialized"},
                {"coefficients", coeffs}};
}

nlohmann::json matrix_to_json(const PolyMatrix& m) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const auto& l : m.row_labels()) rows.push_back(l.str());
    for (const auto& l : m.col_labels()) cols.push_back(l.str());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(row);
    }
    return json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

namespace {

json bidegree_to_json(const BiDegree& d) { return json::array({d.d1, d.d2}); }

json twists_to_json(const ResolutionComplex& r) {
    json b1 = json::array(), b2 = json::array();
    for (const auto& t : r.twist_b1) b1.push_back(bidegree_to_json(t));
    for (const auto& t : r.twist_b2) b2.push_back(bidegree_to_json(t));
    return json{{"b0", bidegree_to_json(r.twist_b0)},
                {"b1", b1},
                {"b2", b2},
                {"b3", bidegree_to_json(r.twist_b3)}};
}

} // namespace

nlohmann::json resolution_to_json(const ResolutionComplex& r) {
    json b1 = json::array(), b3 = json::array(), b2 = json::array();
    json basis1 = json::array(), basis2 = json::array();
    for (std::size_t j = 0; j < r.b1.cols(); ++j) {
        basis1.push_back(r.b1.col_labels()[j].str());
        b1.push_back(r.b1.at(0, j).str());
    }
    for (std::size_t i = 0; i < r.b2.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r.b2.cols(); ++j) row.push_back(r.b2.at(i, j).str());
        b2.push_back(row);
    }
    for (std::size_t i = 0; i < r.b3.rows(); ++i) {
        basis2.push_back(r.b3.row_labels()[i].str());
        b3.push_back(r.b3.at(i, 0).str());
    }
    return json{{"n", r.n},
                {"mode", r.phi.is_generic() ? "generic" : "specialized"},
                {"delta", r.cat.delta.str()},
                {"twists", twists_to_json(r)},
                {"basis", json{{"b1", basis1}, {"b2", basis2}}},
                {"T", matrix_to_json(r.cat.T)},
                {"Q", matrix_to_json(r.cat.Q)},
                {"b1", b1},
                {"b2", b2},
                {"b3", b3}};
}

std::string resolution_to_text(const ResolutionComplex& r) {
    std::string out;
    out += "n = " + std::to_string(r.n) + " (" +
           (r.phi.is_generic() ? "generic" : "specialized") + ")\n";
    out += "delta = " + r.cat.delta.str() + "\n";
    out += "T (basis";
    for (const auto& l : r.cat.T.row_labels()) out += " " + l.str();
    out += "):\n" + r.cat.T.str();
    out += "Q:\n" + r.cat.Q.str();
    out += "b1:\n";
    for (std::size_t j = 0; j < r.b1.cols(); ++j) {
        out += "  " + r.b1.col_labels()[j].str() + " -> " + r.b1.at(0, j).str() + "\n";
    }
    out += "b2 (rows";
    for (const auto& l : r.b2.row_labels()) out += " " + l.str();
    out += "; cols";
    for (const auto& l : r.b2.col_labels()) out += " " + l.str();
    out += "):\n" + r.b2.str();
    out += "b3:\n";
    for (std::size_t i = 0; i < r.b3.rows(); ++i) {
        out += "  " + r.b3.row_labels()[i].str() + " -> " + r.b3.at(i, 0).str() + "\n";
    }
    return out;
}

nlohmann::json report_to_json(const VerificationReport& rep, bool timings) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}};
        if (timings) entry["millis"] = c.millis;
        checks.push_back(entry);
    }
    return json{{"pass", rep.all_pass()}, {"checks", checks}};
}

std::string report_to_text(const VerificationReport& rep, bool timings) {
    std::string out;
    for (const auto& c : rep.checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name;
        if (!c.witness.empty()) out += ": " + c.witness;
        if (timings) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), " (%.1f ms)", c.millis);
            out += buf;
        }
        out += "\n";
    }
    out += rep.all_pass() ? "all checks passed\n" : "CHECKS FAILED\n";
    return out;
}

} // namespace gorlin
