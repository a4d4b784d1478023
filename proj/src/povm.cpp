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

#include "naimark/povm.hpp"

#include <cmath>

#include "naimark/linalg.hpp"
#include "naimark/rng.hpp"

namespace naimark {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr int kRandomPovmRetryCap = 8;
// S must be this far from singular or the draw is rejected; whitening with a
// worse-conditioned S would inflate the completeness residual past 1e-12.
constexpr double kConditionFloor = 1e-6;

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    return out;
}

ComplexMatrix rank1(const std::vector<cdouble> &psi, double weight) {
    ComplexMatrix out(psi.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            out(i, j) = weight * psi[i] * std::conj(psi[j]);
        }
    }
    return out;
}

}  // namespace

PovmValidationReport validate_povm(const std::vector<ComplexMatrix> &candidate,
                                   const ToleranceConfig &cfg) {
    cfg.ensure_valid();
    if (candidate.empty()) {
        throw DimensionMismatch("validate_povm: need at least one element");
    }
    const std::size_t dim = candidate.front().rows();
    for (const ComplexMatrix &m : candidate) {
        if (!m.is_square() || m.rows() != dim) {
            throw DimensionMismatch("validate_povm: elements must be square and equally sized");
        }
        if (!m.all_finite()) {
            throw NonFinite("validate_povm: element contains NaN/Inf");
        }
    }

    PovmValidationReport report;
    report.hermiticity_pass = true;
    report.psd_pass = true;
    ComplexMatrix sum(dim, dim);
    for (const ComplexMatrix &m : candidate) {
        PovmValidationReport::ElementCheck check{};
        check.hermiticity_residual = hermiticity_residual(m);
        // Eigenvalues of the Hermitian part; a failed Hermiticity check is
        // reported above rather than thrown here.
        const HermitianEigen eig = hermitian_eig(hermitian_part(m), cfg);
        check.min_eigenvalue = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
        report.hermiticity_pass &= check.hermiticity_residual <= cfg.verify_tol;
        report.psd_pass &= check.min_eigenvalue >= -cfg.verify_tol;
        report.elements.push_back(check);
        sum += m;
    }
    report.completeness_residual = (sum - ComplexMatrix::identity(dim)).frobenius_norm();
    report.completeness_pass = report.completeness_residual <= cfg.verify_tol;
    return report;
}

PovmValidationReport validate_povm(const Povm &povm, const ToleranceConfig &cfg) {
    std::vector<ComplexMatrix> mats;
    mats.reserve(povm.elements.size());
    for (const PovmElement &e : povm.elements) {
        if (e.matrix.rows() != povm.dim || e.matrix.cols() != povm.dim) {
            throw DimensionMismatch("validate_povm: element size differs from declared dim");
        }
        mats.push_back(e.matrix);
    }
    return validate_povm(mats, cfg);
}

Povm builtin_povm(BuiltinPovm name, const BuiltinParams &params) {
    Povm out;
    out.dim = 2;
    switch (name) {
        case BuiltinPovm::Trine: {
            // Π_k = (2/3)|ψ_k⟩⟨ψ_k| for the three symmetric qubit states.
            const double s = 1.0 / std::sqrt(2.0);
            const std::vector<std::vector<cdouble>> psi = {
                {s, s},
                {s * std::polar(1.0, -kPi / 3.0), s * std::polar(1.0, kPi / 3.0)},
                {-s * std::polar(1.0, kPi / 3.0), -s * std::polar(1.0, -kPi / 3.0)},
            };
            for (std::size_t k = 0; k < 3; ++k) {
                out.elements.push_back({std::to_string(k + 1), rank1(psi[k], 2.0 / 3.0)});
            }
            break;
        }
        case BuiltinPovm::Tetrad: {
            const double s = 1.0 / std::sqrt(2.0);
            for (std::size_t k = 0; k < 4; ++k) {
                const double angle = static_cast<double>(k) * kPi / 4.0;
                const std::vector<cdouble> psi = {s * std::polar(1.0, -angle),
                                                  s * std::polar(1.0, angle)};
                out.elements.push_back({std::to_string(k + 1), rank1(psi, 0.5)});
            }
            break;
        }
        case BuiltinPovm::RouletteXZ: {
            const double z = params.z;
            if (!(z > 0.0 && z < 1.0)) {
                throw ParamOutOfRange("roulette-xz requires z in (0, 1)");
            }
            ComplexMatrix p1{{0.5 * (2.0 - z), 0.5 * z}, {0.5 * z, 0.5 * z}};
            ComplexMatrix pm{{0.5 * z, -0.5 * z}, {-0.5 * z, 0.5 * (2.0 - z)}};
            out.elements.push_back({"1", p1});
            out.elements.push_back({"-1", pm});
            break;
        }
        case BuiltinPovm::RouletteDiag: {
            const double f = params.f;
            if (!(f > 0.0 && f < 0.5)) {
                throw ParamOutOfRange("roulette-diag requires f in (0, 1/2)");
            }
            ComplexMatrix p1{{0.5 + f, 0.0}, {0.0, 0.5 - f}};
            ComplexMatrix pm{{0.5 - f, 0.0}, {0.0, 0.5 + f}};
            out.elements.push_back({"1", p1});
            out.elements.push_back({"-1", pm});
            break;
        }
    }
    return out;
}

Povm builtin_povm(std::string_view name, const BuiltinParams &params) {
    if (name == "trine") {
        return builtin_povm(BuiltinPovm::Trine, params);
    }
    if (name == "tetrad") {
        return builtin_povm(BuiltinPovm::Tetrad, params);
    }
    if (name == "roulette-xz") {
        return builtin_povm(BuiltinPovm::RouletteXZ, params);
    }
    if (name == "roulette-diag") {
        return builtin_povm(BuiltinPovm::RouletteDiag, params);
    }
    throw UnknownExample("unknown example POVM: " + std::string(name));
}

Povm random_povm(std::size_t dim, std::size_t n_elements, const std::vector<std::size_t> &ranks,
                 std::uint64_t seed, const ToleranceConfig &cfg) {
    cfg.ensure_valid();
    if (dim < 1 || n_elements < 1) {
        throw ParamOutOfRange("random_povm: dim and element count must be at least 1");
    }
    std::vector<std::size_t> effective_ranks = ranks;
    if (effective_ranks.empty()) {
        effective_ranks.assign(n_elements, dim);
    }
    if (effective_ranks.size() != n_elements) {
        throw ParamOutOfRange("random_povm: rank list length must match element count");
    }
    for (std::size_t r : effective_ranks) {
        if (r < 1 || r > dim) {
            throw ParamOutOfRange("random_povm: each rank must lie in [1, dim]");
        }
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kRandomPovmRetryCap; ++attempt) {
        std::vector<ComplexMatrix> raw;
        raw.reserve(n_elements);
        ComplexMatrix total(dim, dim);
        for (std::size_t k = 0; k < n_elements; ++k) {
            const ComplexMatrix g = ginibre(dim, effective_ranks[k], rng);
            ComplexMatrix a = hermitian_part(g * g.adjoint());
            total += a;
            raw.push_back(std::move(a));
        }

        const HermitianEigen eig = hermitian_eig(hermitian_part(total), cfg);
        const double lmax = eig.eigenvalues.front();
        const double lmin = eig.eigenvalues.back();
        if (!(lmin > kConditionFloor * lmax)) {
            continue;
        }

        ComplexMatrix whiten(dim, dim);
        for (std::size_t c = 0; c < dim; ++c) {
            const double w = 1.0 / std::sqrt(eig.eigenvalues[c]);
            for (std::size_t i = 0; i < dim; ++i) {
                const cdouble vic = eig.eigenvectors(i, c) * w;
                for (std::size_t j = 0; j < dim; ++j) {
                    whiten(i, j) += vic * std::conj(eig.eigenvectors(j, c));
                }
            }
        }

        Povm out;
        out.dim = dim;
        for (std::size_t k = 0; k < n_elements; ++k) {
            out.elements.push_back({std::to_string(k + 1), hermitian_part(whiten * raw[k] * whiten)});
        }
        return out;
    }
    throw SingularTotal("random_povm: sum of draws near-singular after retries (are the ranks too small?)");
}

}  // namespace naimark
