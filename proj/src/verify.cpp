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

#include "naimark/verify.hpp"

#include <algorithm>
#include <cmath>

#include "naimark/rng.hpp"

namespace naimark {

namespace {

// Tr[A·B] without forming the product.
cdouble trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionMismatch("trace_product shape mismatch");
    }
    cdouble t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t += a(i, j) * b(j, i);
        }
    }
    return t;
}

void require_compatible(const Povm &povm, const NaimarkExtension &ext) {
    if (ext.system_dim != povm.dim) {
        throw DimensionMismatch("extension system dimension differs from the POVM dimension");
    }
    if (ext.projectors.size() < povm.elements.size()) {
        throw DimensionMismatch("extension has fewer projectors than the POVM has elements");
    }
    for (const PovmElement &proj : ext.projectors) {
        if (proj.matrix.rows() != ext.total_dim || proj.matrix.cols() != ext.total_dim) {
            throw DimensionMismatch("projector size differs from the declared total dimension");
        }
    }
}

// |e₁⟩⟨e₁| ⊗ ρ in the ancilla-left layout. When the total dimension is not a
// multiple of D (a no-pad extension) the literal Kronecker product does not
// exist; the embedded state is the same matrix either way.
ComplexMatrix embedded_state(const ComplexMatrix &rho, const NaimarkExtension &ext) {
    if (ext.ancilla_dim >= 1 && ext.ancilla_dim * ext.system_dim == ext.total_dim) {
        ComplexMatrix e11(ext.ancilla_dim, ext.ancilla_dim);
        e11(0, 0) = 1.0;
        return kron(e11, rho);
    }
    ComplexMatrix out(ext.total_dim, ext.total_dim);
    out.set_block(0, 0, rho);
    return out;
}

double born_sample_residual(const Povm &povm, const NaimarkExtension &ext, std::uint64_t seed) {
    const DensityMatrix rho = random_density_matrix(povm.dim, seed);
    const ComplexMatrix lifted = embedded_state(rho.matrix, ext);
    double worst = 0.0;
    for (std::size_t m = 0; m < povm.elements.size(); ++m) {
        const double system_side = trace_product(povm.elements[m].matrix, rho.matrix).real();
        const double extended_side = trace_product(lifted, ext.projectors[m].matrix).real();
        worst = std::max(worst, std::abs(system_side - extended_side));
    }
    return worst;
}

}  // namespace

DensityMatrix random_density_matrix(std::size_t dim, std::uint64_t seed) {
    if (dim < 1) {
        throw ParamOutOfRange("random_density_matrix: dim must be at least 1");
    }
    std::mt19937_64 rng(seed);
    const ComplexMatrix g = ginibre(dim, dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho = rho * cdouble{1.0 / tr, 0.0};
    // Exact Hermitian symmetrization; GG† is only Hermitian to rounding.
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            const cdouble v = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = v;
            rho(j, i) = std::conj(v);
        }
    }
    return DensityMatrix{std::move(rho)};
}

ProjectorResidual check_projector(const ComplexMatrix &e) {
    if (!e.is_square()) {
        throw DimensionMismatch("check_projector requires a square matrix");
    }
    ProjectorResidual out{};
    out.idempotence = (e * e - e).frobenius_norm();
    out.hermiticity = hermiticity_residual(e);
    return out;
}

ComplexMatrix recover_element(const ComplexMatrix &e, std::size_t dim) {
    if (e.rows() < dim || e.cols() < dim) {
        throw DimensionMismatch("recover_element: matrix smaller than the system block");
    }
    return e.block(0, 0, dim, dim);
}

double born_rule_residual_serial(const Povm &povm, const NaimarkExtension &ext,
                                 std::size_t samples, std::uint64_t seed) {
    require_compatible(povm, ext);
    if (samples < 1) {
        throw ParamOutOfRange("born_rule_residual: need at least one sample");
    }
    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        worst = std::max(worst, born_sample_residual(povm, ext, splitmix64(seed + s)));
    }
    return worst;
}

double born_rule_residual(const Povm &povm, const NaimarkExtension &ext, std::size_t samples,
                          std::uint64_t seed) {
    require_compatible(povm, ext);
    if (samples < 1) {
        throw ParamOutOfRange("born_rule_residual: need at least one sample");
    }
    double worst = 0.0;
    const long count = static_cast<long>(samples);
#ifdef _OPENMP
#pragma omp parallel for reduction(max : worst) schedule(static)
#endif
    for (long s = 0; s < count; ++s) {
        worst = std::max(
            worst, born_sample_residual(povm, ext, splitmix64(seed + static_cast<std::uint64_t>(s))));
    }
    return worst;
}

double VerificationReport::max_idempotence() const {
    double m = 0.0;
    for (const ProjectorResidual &r : projectors) {
        m = std::max(m, r.idempotence);
    }
    return m;
}

double VerificationReport::max_hermiticity() const {
    double m = 0.0;
    for (const ProjectorResidual &r : projectors) {
        m = std::max(m, r.hermiticity);
    }
    return m;
}

double VerificationReport::max_orthogonality() const {
    double m = 0.0;
    for (const PairResidual &r : orthogonality) {
        m = std::max(m, r.residual);
    }
    return m;
}

double VerificationReport::max_block_recovery() const {
    double m = 0.0;
    for (double r : block_recovery) {
        m = std::max(m, r);
    }
    return m;
}

VerificationReport verify_extension(const Povm &povm, const NaimarkExtension &ext,
                                    const ToleranceConfig &cfg, std::size_t samples,
                                    std::uint64_t seed) {
    cfg.ensure_valid();
    require_compatible(povm, ext);

    VerificationReport report;
    report.tolerance = cfg.verify_tol;
    report.samples = samples;
    report.seed = seed;

    for (const PovmElement &proj : ext.projectors) {
        report.projectors.push_back(check_projector(proj.matrix));
    }
    // Both orders are reported even though Hermiticity makes them redundant.
    for (std::size_t m = 0; m < ext.projectors.size(); ++m) {
        for (std::size_t n = 0; n < ext.projectors.size(); ++n) {
            if (m == n) {
                continue;
            }
            const double r =
                (ext.projectors[m].matrix * ext.projectors[n].matrix).frobenius_norm();
            report.orthogonality.push_back({m, n, r});
        }
    }
    for (std::size_t m = 0; m < povm.elements.size(); ++m) {
        const ComplexMatrix recovered = recover_element(ext.projectors[m].matrix, povm.dim);
        report.block_recovery.push_back((recovered - povm.elements[m].matrix).frobenius_norm());
    }
    report.born_rule_max = born_rule_residual(povm, ext, samples, seed);

    report.idempotence_pass = report.max_idempotence() <= cfg.verify_tol;
    report.hermiticity_pass = report.max_hermiticity() <= cfg.verify_tol;
    report.orthogonality_pass = report.max_orthogonality() <= cfg.verify_tol;
    report.block_recovery_pass = report.max_block_recovery() <= cfg.verify_tol;
    report.born_rule_pass = report.born_rule_max <= cfg.verify_tol;
    return report;
}

}  // namespace naimark
