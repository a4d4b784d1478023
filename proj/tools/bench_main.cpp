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

// Benchmark: wall time of the Born-rule verification sweep, serial reference
// vs the OpenMP kernel, over a corpus of random POVM extensions. The two
// paths must agree bitwise; the comparison is printed alongside the timings.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "naimark/extension.hpp"
#include "naimark/povm.hpp"
#include "naimark/verify.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Benchmark the serial vs OpenMP Born-rule verification sweep"};
    std::size_t dim = 3;
    std::size_t n_elements = 4;
    std::size_t count = 24;
    std::size_t samples = 2000;
    std::uint64_t seed = 1;
    app.add_option("--dim", dim, "system dimension");
    app.add_option("--elements", n_elements, "outcomes per POVM");
    app.add_option("--count", count, "number of random POVMs");
    app.add_option("--samples", samples, "Born-rule states per extension");
    app.add_option("--seed", seed, "corpus seed");
    CLI11_PARSE(app, argc, argv);

    std::vector<naimark::Povm> povms;
    std::vector<naimark::NaimarkExtension> extensions;
    povms.reserve(count);
    extensions.reserve(count);

    auto start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < count; ++k) {
        povms.push_back(naimark::random_povm(dim, n_elements, {}, seed + k));
        extensions.push_back(
            naimark::build_extension(povms.back(), naimark::FactorMode::Thin).extension);
    }
    const double build_time = seconds_since(start);

    std::vector<double> serial(count);
    start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < count; ++k) {
        serial[k] = naimark::born_rule_residual_serial(povms[k], extensions[k], samples, seed + k);
    }
    const double serial_time = seconds_since(start);

    std::vector<double> parallel(count);
    start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < count; ++k) {
        parallel[k] = naimark::born_rule_residual(povms[k], extensions[k], samples, seed + k);
    }
    const double parallel_time = seconds_since(start);

    double mismatch = 0.0;
    double worst_residual = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        mismatch = std::max(mismatch, std::abs(serial[k] - parallel[k]));
        worst_residual = std::max(worst_residual, serial[k]);
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    std::cout << "corpus: " << count << " random POVMs (dim " << dim << ", " << n_elements
              << " elements), " << samples << " Born samples each\n";
    std::cout << "build + extend        " << build_time << " s\n";
    std::cout << "born sweep (serial)   " << serial_time << " s\n";
    std::cout << "born sweep (openmp, " << threads << " thread" << (threads == 1 ? "" : "s")
              << ")  " << parallel_time << " s";
    if (parallel_time > 0.0) {
        std::cout << "  speedup " << serial_time / parallel_time << "x";
    }
    std::cout << '\n';
    std::cout << "worst Born residual   " << worst_residual << '\n';
    std::cout << "serial/openmp agreement: max difference " << mismatch << '\n';
    return mismatch == 0.0 ? 0 : 1;
}
