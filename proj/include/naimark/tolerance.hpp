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

#ifndef NAIMARK_TOLERANCE_HPP
#define NAIMARK_TOLERANCE_HPP

#include "naimark/errors.hpp"

namespace naimark {

/// Numerical thresholds used across the library.
///
/// rank_tol   — relative cutoff for treating eigenvalues as 0 or 1.
/// check_tol  — residual threshold for the skip checks during construction.
/// verify_tol — residual threshold for verification verdicts.
/// phase_tol  — magnitude threshold for eigenvector phase canonicalization.
struct ToleranceConfig {
    double rank_tol = 1e-12;
    double check_tol = 1e-10;
    double verify_tol = 1e-8;
    double phase_tol = 1e-12;

    void ensure_valid() const {
        for (double t : {rank_tol, check_tol, verify_tol, phase_tol}) {
            if (!(t > 0.0 && t < 1.0)) {
                throw ParamOutOfRange("tolerances must lie strictly in (0, 1)");
            }
        }
    }
};

}  // namespace naimark

#endif
