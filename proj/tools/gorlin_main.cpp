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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gorlin/fixtures.hpp"
#include "gorlin/io.hpp"
#include "gorlin/verify.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDegenerate = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw gorlin::InputError("cannot write '" + out_path + "'");
    out << text;
}

std::string render_report(const gorlin::VerificationReport& rep, const std::string& format,
                          bool timings) {
    if (format == "json") return gorlin::report_to_json(rep, timings).dump(2) + "\n";
    return gorlin::report_to_text(rep, timings);
}

} // namespace

int main(int argc, char** argv) {
    using namespace gorlin;

    CLI::App app{"Gorenstein-linear free resolutions from inverse-system coefficients"};
    app.require_subcommand(1);

    std::string phi_path, format = "text", out_path;
    int n = 0;
    int trials = 20;
    std::uint64_t seed = 1;
    bool timings = false;

    auto add_common = [&](CLI::App* cmd, bool with_out = true) {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_out) cmd->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* cmd_build = app.add_subcommand("build", "resolve an inverse system file");
    cmd_build->add_option("--phi", phi_path, "inverse system JSON file")->required();
    add_common(cmd_build);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    cmd_verify->add_option("--phi", phi_path, "inverse system JSON file");
    cmd_verify->add_option("--n", n, "size for randomized trials (without --phi)");
    cmd_verify->add_option("--trials", trials, "number of randomized trials");
    cmd_verify->add_option("--seed", seed, "seed for randomized trials");
    cmd_verify->add_flag("--timings", timings, "include per-check timings");
    add_common(cmd_verify);

    CLI::App* cmd_generic = app.add_subcommand("generic", "emit the symbolic complex");
    cmd_generic->add_option("--n", n, "half socle degree, 2 <= n <= 3")->required();
    add_common(cmd_generic);

    CLI::App* cmd_examples =
        app.add_subcommand("examples", "check the four built-in systems");
    add_common(cmd_examples);

    CLI::App* cmd_colon = app.add_subcommand("colon", "check the colon-ideal family");
    cmd_colon->add_option("--n", n, "power of the ideal, n >= 2")->required();
    cmd_colon->add_flag("--timings", timings, "include per-check timings");
    add_common(cmd_colon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitBadInput;
    }

    try {
        if (cmd_build->parsed()) {
            const InverseSystem f = load_inverse_system(phi_path);
            const ResolutionComplex r = build_resolution(f);
            emit(format == "json" ? resolution_to_json(r).dump(2) + "\n"
                                  : resolution_to_text(r),
                 out_path);
            return 0;
        }

        if (cmd_verify->parsed()) {
            if (!phi_path.empty()) {
                const InverseSystem f = load_inverse_system(phi_path);
                const VerificationReport rep = full_report(f);
                emit(render_report(rep, format, timings), out_path);
                if (rep.all_pass()) return 0;
                for (const auto& c : rep.checks) {
                    if (c.name == "delta-nonzero" && !c.pass) return kExitDegenerate;
                }
                return kExitCheckFailed;
            }
            if (n < 2) {
                std::cerr << "verify needs --phi or --n N (N >= 2)\n";
                return kExitBadInput;
            }
            std::string text;
            nlohmann::json jtrials = nlohmann::json::array();
            bool ok = true;
            for (int t = 0; t < trials; ++t) {
                const InverseSystem f = random_phi(n, seed + static_cast<std::uint64_t>(t));
                const VerificationReport rep = full_report(f);
                ok = ok && rep.all_pass();
                if (format == "json") {
                    jtrials.push_back(
                        {{"trial", t}, {"report", report_to_json(rep, timings)}});
                } else {
                    text += "trial " + std::to_string(t) + ": " +
                            (rep.all_pass() ? "pass" : "FAIL") + "\n";
                    if (!rep.all_pass()) text += report_to_text(rep, timings);
                }
            }
            if (format == "json") {
                emit(nlohmann::json{{"pass", ok}, {"trials", jtrials}}.dump(2) + "\n",
                     out_path);
            } else {
                text += ok ? "all trials passed\n" : "TRIALS FAILED\n";
                emit(text, out_path);
            }
            return ok ? 0 : kExitCheckFailed;
        }

        if (cmd_generic->parsed()) {
            const ResolutionComplex r = build_resolution(generic_phi(n));
            emit(format == "json" ? resolution_to_json(r).dump(2) + "\n"
                                  : resolution_to_text(r),
                 out_path);
            return 0;
        }

        if (cmd_examples->parsed()) {
            bool ok = true;
            std::string text;
            nlohmann::json jout = nlohmann::json::array();
            for (const auto& fx : example_fixtures()) {
                const FixtureDiff diff = check_fixture(fx);
                ok = ok && diff.ok;
                if (format == "json") {
                    jout.push_back({{"name", fx.name},
                                    {"pass", diff.ok},
                                    {"details", diff.details}});
                } else {
                    text += std::string(fx.name) + ": " + diff.details + "\n";
                }
            }
            if (format == "json") {
                emit(nlohmann::json{{"pass", ok}, {"examples", jout}}.dump(2) + "\n",
                     out_path);
            } else {
                text += ok ? "all examples match the embedded data\n"
                           : "EXAMPLES DIVERGED\n";
                emit(text, out_path);
            }
            return ok ? 0 : kExitCheckFailed;
        }

        if (cmd_colon->parsed()) {
            const VerificationReport rep = check_colon_ideal(n);
            emit(render_report(rep, format, timings), out_path);
            return rep.all_pass() ? 0 : kExitCheckFailed;
        }
    } catch (const DegenerateInverseSystem& e) {
        std::cerr << "degenerate inverse system: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
