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

#ifndef NAIMARK_LINALG_HPP
#define NAIMARK_LINALG_HPP

#include <vector>

#include "naimark/complex_matrix.hpp"
#include "naimark/factor.hpp"
#include "naimark/tolerance.hpp"

namespace naimark {

/// Result of a Hermitian eigendecomposition H = V·diag(λ)·V†.
/// Eigenvalues are sorted descending; column k of V pairs with eigenvalue k.
/// Each eigenvector's first component of significant magnitude is made real
/// and positive (canonical phase).
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
/// Throws NotHermitian if ‖H − H†‖_F > check_tol·max(1, ‖H‖_F),
/// NoConvergence if the sweep limit is reached.
HermitianEigen hermitian_eig(const ComplexMatrix &h, const ToleranceConfig &cfg = {});

/// Multiply each column of v so that its first component of magnitude
/// greater than phase_tol becomes real and positive. Idempotent.
void canonicalize_phases(ComplexMatrix &v, double phase_tol);

/// Factor a Hermitian PSD matrix P as Y·Y†.
/// Thin mode yields D×r with r the numerical rank; Hermitian mode yields the
/// principal square root. Eigenvalues below -rank_tol (relative) raise NotPsd.
Factor psd_factor(const ComplexMatrix &p, FactorMode mode, const ToleranceConfig &cfg = {});

/// Principal square root of a Hermitian PSD matrix. Eigenvalues within
/// rank_tol of zero map to exactly zero.
ComplexMatrix sqrt_psd(const ComplexMatrix &p, const ToleranceConfig &cfg = {});

/// Moore–Penrose inverse restricted to the support: eigenvalues at or below
/// rank_tol·λ_max are treated as exact zeros and excluded from inversion.
ComplexMatrix pinv_on_support(const ComplexMatrix &p, const ToleranceConfig &cfg = {});

/// Partial trace over the first (ancilla) tensor factor under the
/// ancilla-left Kronecker layout: the sum of the dA diagonal dS×dS blocks.
ComplexMatrix partial_trace_first(const ComplexMatrix &m, std::size_t d_ancilla, std::size_t d_system);

/// N×N matrix with b in the upper-left corner and zeros elsewhere.
ComplexMatrix embed_upper_left(const ComplexMatrix &b, std::size_t n);

}  // namespace naimark

#endif
