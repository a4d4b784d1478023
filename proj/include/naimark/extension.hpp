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

#ifndef NAIMARK_EXTENSION_HPP
#define NAIMARK_EXTENSION_HPP

#include <string>
#include <vector>

#include "naimark/complex_matrix.hpp"
#include "naimark/factor.hpp"
#include "naimark/povm.hpp"
#include "naimark/tolerance.hpp"

namespace naimark {

/// The bordering blocks produced by a completion step: the coupling block A
/// and the Hermitian closing block B of [[P, A], [A†, B]].
struct CompletionBlocks {
    ComplexMatrix a;
    ComplexMatrix b;
};

/// Output of the idempotent completion of a factored block P = Y·Y†.
struct IdempotentCompletion {
    CompletionBlocks blocks;   // empty when skipped
    ComplexMatrix projector;   // E assembled from the blocks
    Factor stacked;            // Z with E = Z·Z†
    bool skipped = false;      // P was already idempotent; no band appended
    // Terms reused by later orthogonal completions against this projector.
    ComplexMatrix r_sqrt;      // √(I − Y†Y); 0×0 when skipped
    ComplexMatrix r_pinv_yd;   // (√(I − Y†Y))⁺ · Y†; zero-row when skipped
};

/// Border a factored block so that [[Y·Y†, A], [A†, B]] is a projector:
/// A = Y·√(I − Y†Y), B = I − Y†Y. If Y·Y† is already idempotent within
/// check_tol the step is skipped and no band is appended.
/// Throws FactorTooLarge when Y†Y has an eigenvalue above 1 + rank_tol.
IdempotentCompletion idempotent_completion(const Factor &y, const ToleranceConfig &cfg = {});

/// Extend the factor X of the projector under construction so that the
/// result is orthogonal to the completed projector with chain factor y_prev:
/// X_next = [X; −(√(I − Y†Y))⁺·Y†·X], rows appended in y_prev's idempotent
/// band. When X·X† already annihilates y_prev the appended band is zero.
/// Throws InconsistentOrthogonality when the constraint cannot be met within
/// check_tol (impossible for elements of a valid POVM).
Factor orthogonal_completion(const Factor &x, const Factor &y_prev,
                             const ComplexMatrix &r_pinv_yd, const ToleranceConfig &cfg = {});

/// Construction record for one outcome: the factor sequence produced by the
/// successive orthogonal completions and the final stacked factor.
struct ChainStage {
    std::vector<Factor> steps;  // X^{(1)}, …, X^{(m)} = Y_m
    Factor stacked;             // Z_m with E_m = Z_m·Z_m†
    ComplexMatrix r_pinv_yd;    // cached (√(I − Y_m†Y_m))⁺·Y_m†
    std::size_t band_width = 0;
};

struct FactorChain {
    std::size_t system_dim = 0;
    std::vector<ChainStage> stages;
};

struct ExtensionConventions {
    FactorMode factor_mode = FactorMode::Thin;
    std::string phase = "first-nonzero-real-positive";
    ToleranceConfig tolerances;
};

/// Projective extension of a POVM: M projectors on an N×N space whose
/// upper-left D×D blocks reproduce the source elements.
struct NaimarkExtension {
    std::size_t system_dim = 0;
    std::size_t total_dim = 0;
    std::size_t ancilla_dim = 0;  // total_dim / system_dim; 0 if not divisible (no-pad)
    std::vector<PovmElement> projectors;
    std::vector<std::size_t> band_widths;  // (D, w_1, …, w_M)
    ExtensionConventions conventions;
};

struct BuildOptions {
    bool pad = true;           // round the total dimension up to a multiple of D
    bool complete_pvm = false; // append I_N − ΣE_m so the output resolves the identity
};

struct BuildResult {
    NaimarkExtension extension;
    FactorChain chain;
};

/// The iterative construction: factor each element, orthogonalize against
/// every previously built projector in order, then complete to an
/// idempotent. Throws InvalidPovm when the input fails validation.
BuildResult build_extension(const Povm &povm, FactorMode mode, const ToleranceConfig &cfg = {},
                            const BuildOptions &options = {});

/// The recursive factor construction alone: all X_m^{(i)}, Y_m, Z_m and the
/// cached pseudo-inverse products. Z_m·Z_m† reproduces build_extension's E_m.
FactorChain factor_chain(const Povm &povm, FactorMode mode, const ToleranceConfig &cfg = {});

struct PaddedDims {
    std::size_t total_dim = 0;
    std::size_t ancilla_dim = 0;
};

/// Smallest multiple of the system dimension that holds raw_dim.
PaddedDims pad_to_tensor(std::size_t raw_dim, std::size_t system_dim);

}  // namespace naimark

#endif
