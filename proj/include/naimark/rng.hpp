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

#ifndef NAIMARK_RNG_HPP
#define NAIMARK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "naimark/complex_matrix.hpp"

namespace naimark {

/// SplitMix64 mixing step, used to derive independent per-sample seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform double in (0, 1], built from the top 53 bits of the generator.
/// Hand-rolled so that a fixed seed yields the same stream on every platform
/// (std::uniform_real_distribution makes no such promise).
inline double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Standard normal via Box–Muller on the deterministic uniform stream.
inline double gaussian(std::mt19937_64 &rng) {
    const double u = uniform_unit(rng);
    const double v = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
}

/// Matrix of iid standard complex Gaussian entries (Ginibre ensemble).
inline ComplexMatrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double re = gaussian(rng);
            const double im = gaussian(rng);
            g(i, j) = cdouble{re, im};
        }
    }
    return g;
}

}  // namespace naimark

#endif
