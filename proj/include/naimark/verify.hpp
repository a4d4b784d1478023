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

#ifndef NAIMARK_VERIFY_HPP
#define NAIMARK_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "naimark/complex_matrix.hpp"
#include "naimark/extension.hpp"
#include "naimark/povm.hpp"
#include "naimark/tolerance.hpp"

// Independent verification of an extension against its source POVM. Nothing
// in this module calls the construction code: every residual is computed
// from the matrices alone, so an all-pass report does not presume a correct
// builder.

namespace naimark {

/// Unit-trace Hermitian PSD state.
struct DensityMatrix {
    ComplexMatrix matrix;
};

/// Full-rank random state ρ = G·G†/Tr[G·G†] with complex Gaussian G.
DensityMatrix random_density_matrix(std::size_t dim, std::uint64_t seed);

struct ProjectorResidual {
    double idempotence;
    double hermiticity;
};

/// ‖E·E − E‖_F and ‖E − E†‖_F.
ProjectorResidual check_projector(const ComplexMatrix &e);

/// Upper-left D×D block of E: the element the extension encodes.
ComplexMatrix recover_element(const ComplexMatrix &e, std::size_t dim);

/// Max over sampled states and outcomes of
/// |Tr[Π_m·ρ] − Tr[(|e₁⟩⟨e₁| ⊗ ρ)·E_m]|.
/// The enlarged side goes through an explicit Kronecker embedding and a full
/// trace, never the block shortcut. Per-sample states are derived from
/// (seed, sample) so evaluation order cannot change the result; this variant
/// runs the samples OpenMP-parallel.
double born_rule_residual(const Povm &povm, const NaimarkExtension &ext, std::size_t samples,
                          std::uint64_t seed);

/// Serial reference for born_rule_residual; returns bit-identical values.
double born_rule_residual_serial(const Povm &povm, const NaimarkExtension &ext,
                                 std::size_t samples, std::uint64_t seed);

/// Residuals for every defining property of an extension.
struct VerificationReport {
    struct PairResidual {
        std::size_t m;
        std::size_t n;
        double residual;
    };

    double tolerance = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    std::vector<ProjectorResidual> projectors;
    std::vector<PairResidual> orthogonality;
    std::vector<double> block_recovery;
    double born_rule_max = 0.0;

    bool idempotence_pass = false;
    bool hermiticity_pass = false;
    bool orthogonality_pass = false;
    bool block_recovery_pass = false;
    bool born_rule_pass = false;

    bool pass() const {
        return idempotence_pass && hermiticity_pass && orthogonality_pass &&
               block_recovery_pass && born_rule_pass;
    }

    double max_idempotence() const;
    double max_hermiticity() const;
    double max_orthogonality() const;
    double max_block_recovery() const;
};

/// Run every check: per-projector idempotence and Hermiticity, all ordered
/// pairwise orthogonality residuals, block recovery against the source
/// elements, and the Born-rule sweep.
VerificationReport verify_extension(const Povm &povm, const NaimarkExtension &ext,
                                    const ToleranceConfig &cfg = {}, std::size_t samples = 100,
                                    std::uint64_t seed = 0);

}  // namespace naimark

#endif
