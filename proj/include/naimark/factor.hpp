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

#ifndef NAIMARK_FACTOR_HPP
#define NAIMARK_FACTOR_HPP

#include <cstddef>
#include <numeric>
#include <vector>

#include "naimark/complex_matrix.hpp"

namespace naimark {

/// How a PSD block P is factored into Y with P = Y·Y†.
///   Thin      — Y = V_r·√Λ_r, one column per nonzero eigenvalue.
///   Hermitian — Y = √P, the principal square root (square, Hermitian).
enum class FactorMode {
    Thin,
    Hermitian,
};

/// A matrix Y with P = Y·Y† for some PSD block P of the growing extension.
/// band_widths records which row bands of the enlarged space Y occupies;
/// the widths sum to Y's height. Zero-width bands mark skipped steps.
struct Factor {
    ComplexMatrix matrix;
    std::vector<std::size_t> band_widths;

    std::size_t height() const { return matrix.rows(); }
    std::size_t width() const { return matrix.cols(); }

    std::size_t band_total() const {
        return std::accumulate(band_widths.begin(), band_widths.end(), std::size_t{0});
    }
};

}  // namespace naimark

#endif
