// Copyright 2026 The Naimark Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: build extensions from POVM files, verify extension
// files, emit the builtin example corpus, and generate random POVMs.
//
// Exit codes: 0 success / all-pass, 1 verification failure (report still
// written), 2 usage or input errors.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "naimark/extension.hpp"
#include "naimark/json_io.hpp"
#include "naimark/povm.hpp"
#include "naimark/verify.hpp"

namespace {

using naimark::json;

void emit(const json &j, const std::string &output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        naimark::save_json_file(output_path, j);
    }
}

naimark::FactorMode parse_mode(const std::string &mode) {
    if (mode == "thin") {
        return naimark::FactorMode::Thin;
    }
    if (mode == "hermitian") {
        return naimark::FactorMode::Hermitian;
    }
    throw naimark::ParamOutOfRange("--mode must be thin or hermitian");
}

int run(int argc, char **argv) {
    CLI::App app{"Naimark extensions of finite POVMs: iterative block-completion builder"};
    app.require_subcommand(1);

    // build
    auto *build = app.add_subcommand("build", "Build the projective extension of a POVM file");
    std::string build_input;
    std::string build_output;
    std::string build_mode = "thin";
    double build_tol = 1e-8;
    bool no_pad = false;
    bool complete_pvm = false;
    build->add_option("povm", build_input, "POVM JSON file")->required();
    build->add_option("-o,--output", build_output, "extension JSON output (stdout if omitted)");
    build->add_option("--mode", build_mode, "factor mode: thin or hermitian")
        ->check(CLI::IsMember({"thin", "hermitian"}));
    build->add_option("--tol", build_tol, "verification tolerance recorded in the output");
    build->add_flag("--no-pad", no_pad, "keep the raw dimension instead of padding to a multiple of dim");
    build->add_flag("--complete-pvm", complete_pvm, "append the complement projector I - sum(E)");

    // verify
    auto *verify = app.add_subcommand("verify", "Verify an extension file against its POVM");
    std::string verify_ext;
    std::string verify_povm;
    std::string verify_output;
    std::size_t samples = 100;
    std::uint64_t verify_seed = 0;
    double verify_tol = 1e-8;
    verify->add_option("extension", verify_ext, "extension JSON file")->required();
    verify->add_option("--povm", verify_povm, "source POVM JSON file")->required();
    verify->add_option("-o,--output", verify_output, "report JSON output (stdout if omitted)");
    verify->add_option("--samples", samples, "random states for the Born-rule check");
    verify->add_option("--seed", verify_seed, "seed for the Born-rule states");
    verify->add_option("--tol", verify_tol, "residual threshold for verdicts");

    // example
    auto *example = app.add_subcommand("example", "Emit a builtin example POVM");
    std::string example_name;
    std::string example_output;
    naimark::BuiltinParams params;
    example->add_option("name", example_name, "trine, tetrad, roulette-xz, or roulette-diag")
        ->required();
    example->add_option("-o,--output", example_output, "POVM JSON output (stdout if omitted)");
    example->add_option("--z", params.z, "roulette-xz probability, in (0, 1)");
    example->add_option("--f", params.f, "roulette-diag bias, in (0, 1/2)");

    // random-povm
    auto *random = app.add_subcommand("random-povm", "Generate a random POVM");
    std::size_t dim = 2;
    std::size_t n_elements = 2;
    std::vector<std::size_t> ranks;
    std::uint64_t random_seed = 0;
    std::string random_output;
    random->add_option("--dim", dim, "system dimension")->required();
    random->add_option("--elements", n_elements, "number of outcomes")->required();
    random->add_option("--ranks", ranks, "comma-separated element ranks (default: full rank)")
        ->delimiter(',');
    random->add_option("--seed", random_seed, "generator seed");
    random->add_option("-o,--output", random_output, "POVM JSON output (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) {
            naimark::ToleranceConfig cfg;
            cfg.verify_tol = build_tol;
            const naimark::Povm povm = naimark::povm_from_json(naimark::load_json_file(build_input));
            const naimark::PovmValidationReport validation = naimark::validate_povm(povm, cfg);
            if (!validation.pass()) {
                std::cerr << "input is not a POVM: completeness residual "
                          << validation.completeness_residual << '\n';
                for (std::size_t k = 0; k < validation.elements.size(); ++k) {
                    const auto &e = validation.elements[k];
                    std::cerr << "  element " << k << ": hermiticity " << e.hermiticity_residual
                              << ", min eigenvalue " << e.min_eigenvalue << '\n';
                }
                return 2;
            }
            naimark::BuildOptions options;
            options.pad = !no_pad;
            options.complete_pvm = complete_pvm;
            const naimark::BuildResult result =
                naimark::build_extension(povm, parse_mode(build_mode), cfg, options);
            emit(naimark::extension_to_json(result.extension), build_output);
            return 0;
        }

        if (verify->parsed()) {
            naimark::ToleranceConfig cfg;
            cfg.verify_tol = verify_tol;
            const naimark::Povm povm = naimark::povm_from_json(naimark::load_json_file(verify_povm));
            const naimark::NaimarkExtension ext =
                naimark::extension_from_json(naimark::load_json_file(verify_ext));
            const naimark::VerificationReport report =
                naimark::verify_extension(povm, ext, cfg, samples, verify_seed);
            emit(naimark::report_to_json(report), verify_output);
            if (!report.pass()) {
                std::cerr << "verification failed (tolerance " << verify_tol << ")\n";
                return 1;
            }
            return 0;
        }

        if (example->parsed()) {
            emit(naimark::povm_to_json(naimark::builtin_povm(example_name, params)), example_output);
            return 0;
        }

        if (random->parsed()) {
            const naimark::Povm povm = naimark::random_povm(dim, n_elements, ranks, random_seed);
            emit(naimark::povm_to_json(povm), random_output);
            return 0;
        }
    } catch (const naimark::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char **argv) { return run(argc, argv); }
