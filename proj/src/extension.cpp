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

#include "naimark/extension.hpp"

#include <cmath>
#include <utility>

#include "naimark/linalg.hpp"

namespace naimark {

namespace {

// √(I − Y†Y) and its support pseudo-inverse from one eigendecomposition of
// G = Y†Y. Eigenvalues within rank_tol of 1 are treated as exactly 1 (the
// direction is saturated and leaves the support); above 1 + rank_tol the
// factor violates the POVM bound.
struct ComplementRoot {
    ComplexMatrix r_sqrt;
    ComplexMatrix r_pinv;
};

ComplementRoot complement_root(const ComplexMatrix &gram, const ToleranceConfig &cfg) {
    const HermitianEigen eig = hermitian_eig(gram, cfg);
    const std::size_t r = gram.rows();
    std::vector<double> mu(r);
    for (std::size_t k = 0; k < r; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda > 1.0 + cfg.rank_tol) {
            throw FactorTooLarge("factor gram eigenvalue " + std::to_string(lambda) +
                                 " exceeds the POVM bound");
        }
        mu[k] = lambda >= 1.0 - cfg.rank_tol ? 0.0 : 1.0 - lambda;
    }
    ComplementRoot out;
    out.r_sqrt = ComplexMatrix(r, r);
    out.r_pinv = ComplexMatrix(r, r);
    for (std::size_t k = 0; k < r; ++k) {
        if (mu[k] == 0.0) {
            continue;
        }
        const double root = std::sqrt(mu[k]);
        const double inv = 1.0 / root;
        for (std::size_t i = 0; i < r; ++i) {
            const cdouble vik = eig.eigenvectors(i, k);
            for (std::size_t j = 0; j < r; ++j) {
                const cdouble term = vik * std::conj(eig.eigenvectors(j, k));
                out.r_sqrt(i, j) += root * term;
                out.r_pinv(i, j) += inv * term;
            }
        }
    }
    return out;
}

Factor pad_rows(const Factor &x, std::size_t height) {
    if (x.height() == height) {
        return x;
    }
    if (x.height() > height) {
        throw DimensionMismatch("factor taller than the band space it must occupy");
    }
    Factor out = x;
    out.matrix = vstack(x.matrix, ComplexMatrix(height - x.height(), x.width()));
    out.band_widths.push_back(height - x.height());
    return out;
}

// Core orthogonality step. `r_sqrt` may be null; it is then derived from
// y_prev when the consistency residual needs it.
Factor orthogonal_step(const Factor &x, const Factor &y_prev, const ComplexMatrix &t,
                       const ComplexMatrix *r_sqrt, const ToleranceConfig &cfg) {
    const std::size_t height = y_prev.height();
    const std::size_t band = t.rows();
    if (band > 0 && t.cols() != height) {
        throw DimensionMismatch("cached pseudo-inverse product does not match y_prev's height");
    }
    const Factor xp = pad_rows(x, height);
    const std::size_t cols = xp.width();

    Factor next = xp;
    next.band_widths.push_back(band);

    const double xnorm = xp.matrix.frobenius_norm();
    const ComplexMatrix overlap = y_prev.matrix.adjoint() * xp.matrix;  // Y†X
    const double overlap_scale = cfg.check_tol * std::max(1.0, xnorm);

    // Skip when the new block already annihilates the previous projector;
    // appending exact zeros keeps golden outputs free of eps-level bands.
    const double xxy_norm = (xp.matrix * overlap.adjoint()).frobenius_norm();  // ‖XX†Y‖
    if (xxy_norm <= cfg.check_tol * xnorm * xnorm &&
        overlap.frobenius_norm() <= overlap_scale) {
        next.matrix = vstack(xp.matrix, ComplexMatrix(band, cols));
        return next;
    }

    if (band == 0) {
        // The previous projector was closed without a slack band, so the
        // constraint is solvable only if the overlap already vanishes.
        if (overlap.frobenius_norm() > overlap_scale) {
            throw InconsistentOrthogonality(
                "no slack band available and the block overlap does not vanish");
        }
        next.matrix = xp.matrix;
        return next;
    }

    const ComplexMatrix appended = t * xp.matrix;  // (√(I−Y†Y))⁺·Y†·X
    ComplexMatrix r_local;
    const ComplexMatrix *r = r_sqrt;
    if (r == nullptr) {
        r_local = complement_root(y_prev.matrix.adjoint() * y_prev.matrix, cfg).r_sqrt;
        r = &r_local;
    }
    // Achieved orthogonality: Z†X_next = Y†X − R·(R⁺Y†X) must vanish.
    const double residual = (overlap - *r * appended).frobenius_norm();
    if (residual > overlap_scale) {
        throw InconsistentOrthogonality("pseudo-inverse solve residual " +
                                        std::to_string(residual) + " exceeds check tolerance");
    }
    next.matrix = vstack(xp.matrix, -appended);
    return next;
}

struct Construction {
    FactorChain chain;
    std::vector<ComplexMatrix> raw_projectors;  // block-assembled, pre-embedding
    std::vector<std::size_t> band_widths;       // (D, w_1, …, w_M)
    std::size_t raw_dim = 0;
};

Construction run_construction(const Povm &povm, FactorMode mode, const ToleranceConfig &cfg) {
    cfg.ensure_valid();
    const PovmValidationReport validation = validate_povm(povm, cfg);
    if (!validation.pass()) {
        throw InvalidPovm("build input failed POVM validation (completeness residual " +
                          std::to_string(validation.completeness_residual) + ")");
    }

    Construction out;
    out.chain.system_dim = povm.dim;
    out.band_widths = {povm.dim};

    for (const PovmElement &element : povm.elements) {
        ChainStage stage;
        Factor x = psd_factor(element.matrix, mode, cfg);
        stage.steps.push_back(x);
        for (const ChainStage &prev : out.chain.stages) {
            const Factor &y_prev = prev.steps.back();
            // √(I − Y†Y) sits in the bottom band of the stacked factor Z.
            ComplexMatrix r_block;
            const ComplexMatrix *r = nullptr;
            if (prev.band_width > 0) {
                r_block = prev.stacked.matrix.block(y_prev.height(), 0, prev.band_width,
                                                    prev.stacked.width());
                r = &r_block;
            }
            x = orthogonal_step(x, y_prev, prev.r_pinv_yd, r, cfg);
            stage.steps.push_back(x);
        }

        IdempotentCompletion idem = idempotent_completion(x, cfg);
        stage.stacked = std::move(idem.stacked);
        stage.r_pinv_yd = std::move(idem.r_pinv_yd);
        stage.band_width = idem.skipped ? 0 : x.width();
        out.raw_projectors.push_back(std::move(idem.projector));
        out.band_widths.push_back(stage.band_width);
        out.chain.stages.push_back(std::move(stage));
    }

    out.raw_dim = 0;
    for (std::size_t w : out.band_widths) {
        out.raw_dim += w;
    }
    return out;
}

}  // namespace

IdempotentCompletion idempotent_completion(const Factor &y, const ToleranceConfig &cfg) {
    cfg.ensure_valid();
    if (!y.matrix.all_finite()) {
        throw NonFinite("idempotent_completion: factor contains NaN/Inf");
    }
    const std::size_t height = y.height();
    const std::size_t width = y.width();
    const ComplexMatrix p = y.matrix * y.matrix.adjoint();

    IdempotentCompletion out;
    if ((p * p - p).frobenius_norm() <= cfg.check_tol) {
        out.skipped = true;
        out.projector = p;
        out.stacked = y;
        out.blocks.a = ComplexMatrix(height, 0);
        out.blocks.b = ComplexMatrix(0, 0);
        out.r_sqrt = ComplexMatrix(0, 0);
        out.r_pinv_yd = ComplexMatrix(0, height);
        return out;
    }

    const ComplexMatrix gram = y.matrix.adjoint() * y.matrix;
    ComplementRoot root = complement_root(gram, cfg);

    out.blocks.a = y.matrix * root.r_sqrt;               // A = Y·√(I − Y†Y)
    out.blocks.b = ComplexMatrix::identity(width) - gram;  // B = I − Y†Y

    ComplexMatrix e(height + width, height + width);
    e.set_block(0, 0, p);
    e.set_block(0, height, out.blocks.a);
    e.set_block(height, 0, out.blocks.a.adjoint());
    e.set_block(height, height, out.blocks.b);
    out.projector = std::move(e);

    out.stacked.matrix = vstack(y.matrix, root.r_sqrt);
    out.stacked.band_widths = y.band_widths;
    out.stacked.band_widths.push_back(width);

    out.r_pinv_yd = root.r_pinv * y.matrix.adjoint();
    out.r_sqrt = std::move(root.r_sqrt);
    return out;
}

Factor orthogonal_completion(const Factor &x, const Factor &y_prev,
                             const ComplexMatrix &r_pinv_yd, const ToleranceConfig &cfg) {
    cfg.ensure_valid();
    if (!x.matrix.all_finite() || !y_prev.matrix.all_finite()) {
        throw NonFinite("orthogonal_completion: input contains NaN/Inf");
    }
    return orthogonal_step(x, y_prev, r_pinv_yd, nullptr, cfg);
}

PaddedDims pad_to_tensor(std::size_t raw_dim, std::size_t system_dim) {
    if (system_dim < 1 || raw_dim < system_dim) {
        throw ParamOutOfRange("pad_to_tensor: need raw_dim >= system_dim >= 1");
    }
    PaddedDims out;
    out.ancilla_dim = (raw_dim + system_dim - 1) / system_dim;
    out.total_dim = out.ancilla_dim * system_dim;
    return out;
}

BuildResult build_extension(const Povm &povm, FactorMode mode, const ToleranceConfig &cfg,
                            const BuildOptions &options) {
    Construction built = run_construction(povm, mode, cfg);

    NaimarkExtension ext;
    ext.system_dim = povm.dim;
    ext.band_widths = built.band_widths;
    ext.conventions.factor_mode = mode;
    ext.conventions.tolerances = cfg;

    if (options.pad) {
        const PaddedDims dims = pad_to_tensor(built.raw_dim, povm.dim);
        ext.total_dim = dims.total_dim;
        ext.ancilla_dim = dims.ancilla_dim;
    } else {
        ext.total_dim = built.raw_dim;
        ext.ancilla_dim = built.raw_dim % povm.dim == 0 ? built.raw_dim / povm.dim : 0;
    }

    ComplexMatrix sum(ext.total_dim, ext.total_dim);
    for (std::size_t m = 0; m < povm.elements.size(); ++m) {
        ComplexMatrix embedded = embed_upper_left(built.raw_projectors[m], ext.total_dim);
        sum += embedded;
        ext.projectors.push_back({povm.elements[m].label, std::move(embedded)});
    }
    if (options.complete_pvm) {
        ext.projectors.push_back({"complement", ComplexMatrix::identity(ext.total_dim) - sum});
    }

    return BuildResult{std::move(ext), std::move(built.chain)};
}

FactorChain factor_chain(const Povm &povm, FactorMode mode, const ToleranceConfig &cfg) {
    return run_construction(povm, mode, cfg).chain;
}

}  // namespace naimark
