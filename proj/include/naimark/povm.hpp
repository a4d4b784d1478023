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

#ifndef NAIMARK_POVM_HPP
#define NAIMARK_POVM_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "naimark/complex_matrix.hpp"
#include "naimark/tolerance.hpp"

namespace naimark {

struct PovmElement {
    std::string label;
    ComplexMatrix matrix;
};

/// Ordered list of M positive semi-definite D×D elements summing to I_D.
struct Povm {
    std::size_t dim = 0;
    std::vector<PovmElement> elements;
};

/// Per-element and aggregate residuals against the POVM defining constraints.
/// Report-based on purpose: a caller can print every failure at once.
struct PovmValidationReport {
    struct ElementCheck {
        double hermiticity_residual;
        double min_eigenvalue;
    };
    std::vector<ElementCheck> elements;
    double completeness_residual = 0.0;
    bool hermiticity_pass = false;
    bool psd_pass = false;
    bool completeness_pass = false;

    bool pass() const { return hermiticity_pass && psd_pass && completeness_pass; }
};

/// Check Hermiticity, positivity, and completeness of a candidate element set.
/// Throws DimensionMismatch only for ragged/non-square input; mere check
/// failures are reported, not thrown.
PovmValidationReport validate_povm(const std::vector<ComplexMatrix> &candidate,
                                   const ToleranceConfig &cfg = {});
PovmValidationReport validate_povm(const Povm &povm, const ToleranceConfig &cfg = {});

enum class BuiltinPovm {
    Trine,
    Tetrad,
    RouletteXZ,
    RouletteDiag,
};

struct BuiltinParams {
    double z = 0.5;   // roulette-xz mixing probability, in (0, 1)
    double f = 0.25;  // roulette-diag bias, in (0, 1/2)
};

Povm builtin_povm(BuiltinPovm name, const BuiltinParams &params = {});

/// Name-based lookup: trine, tetrad, roulette-xz, roulette-diag.
/// Throws UnknownExample for anything else.
Povm builtin_povm(std::string_view name, const BuiltinParams &params = {});

/// Random POVM with prescribed element ranks: draws Gaussian-factor PSD
/// matrices A_k, then whitens with S^{-1/2}, S = ΣA_k. Deterministic per
/// seed. Throws SingularTotal when S stays near-singular after the retry
/// cap (always the case when Σ ranks < dim).
Povm random_povm(std::size_t dim, std::size_t n_elements, const std::vector<std::size_t> &ranks,
                 std::uint64_t seed, const ToleranceConfig &cfg = {});

}  // namespace naimark

#endif
