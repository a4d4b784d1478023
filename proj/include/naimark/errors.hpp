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

#ifndef NAIMARK_ERRORS_HPP
#define NAIMARK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace naimark {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotPsd : Error {
    using Error::Error;
};

/// Iterative eigensolver did not converge; carries the sweep count reached.
struct NoConvergence : Error {
    NoConvergence(const std::string &msg, int sweeps_done)
        : Error(msg + " (sweeps: " + std::to_string(sweeps_done) + ")"), sweeps(sweeps_done) {}
    int sweeps;
};

struct NonFinite : Error {
    using Error::Error;
};

/// A factor Y violates the POVM bound Y†Y ≤ I.
struct FactorTooLarge : Error {
    using Error::Error;
};

/// The orthogonality constraint has no solution within tolerance; the input
/// set cannot come from a valid POVM.
struct InconsistentOrthogonality : Error {
    using Error::Error;
};

struct UnknownExample : Error {
    using Error::Error;
};

struct ParamOutOfRange : Error {
    using Error::Error;
};

/// Sum of random PSD draws stayed near-singular after the retry cap.
struct SingularTotal : Error {
    using Error::Error;
};

struct InvalidPovm : Error {
    using Error::Error;
};

}  // namespace naimark

#endif
