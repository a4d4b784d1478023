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

#include "naimark/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace naimark {

namespace {

constexpr int kMaxJacobiSweeps = 64;

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p, q). The plane rotation is
// U = diag(1, e^{-iφ})·G with G the classical real rotation built from
// τ = (a_qq - a_pp) / (2|a_pq|).
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const cdouble apq = a(p, q);
    const double r = std::abs(apq);
    if (r < 1e-150) {
        return;
    }
    const cdouble phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const cdouble upp = c;
    const cdouble upq = s;
    const cdouble uqp = -s * std::conj(phase);
    const cdouble uqq = c * std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {  // A <- A·U
        const cdouble akp = a(k, p);
        const cdouble akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // A <- U†·A
        const cdouble apk = a(p, k);
        const cdouble aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {  // V <- V·U
        const cdouble vkp = v(k, p);
        const cdouble vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

// Spectral function application V·diag(f(λ))·V† from one eigendecomposition.
ComplexMatrix spectral_apply(const HermitianEigen &eig, const std::vector<double> &fvals) {
    const std::size_t n = eig.eigenvectors.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < fvals.size(); ++k) {
        if (fvals[k] == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const cdouble vik = eig.eigenvectors(i, k) * fvals[k];
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
            }
        }
    }
    return out;
}

void require_psd(const HermitianEigen &eig, double rank_tol, const char *op) {
    const double lmax = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    const double neg_tol = rank_tol * std::max(lmax, 1.0);
    for (double l : eig.eigenvalues) {
        if (l < -neg_tol) {
            throw NotPsd(std::string(op) + ": eigenvalue " + std::to_string(l) + " below zero");
        }
    }
}

}  // namespace

void canonicalize_phases(ComplexMatrix &v, double phase_tol) {
    for (std::size_t j = 0; j < v.cols(); ++j) {
        for (std::size_t i = 0; i < v.rows(); ++i) {
            const double mag = std::abs(v(i, j));
            if (mag > phase_tol) {
                // Already real positive: leave the column untouched so the
                // operation is exactly idempotent.
                if (!(v(i, j).imag() == 0.0 && v(i, j).real() > 0.0)) {
                    const cdouble ph = std::conj(v(i, j) / mag);
                    for (std::size_t k = 0; k < v.rows(); ++k) {
                        v(k, j) *= ph;
                    }
                    v(i, j) = mag;  // pivot is |v| by construction
                }
                break;
            }
        }
    }
}

HermitianEigen hermitian_eig(const ComplexMatrix &h, const ToleranceConfig &cfg) {
    if (!h.is_square()) {
        throw DimensionMismatch("hermitian_eig requires a square matrix");
    }
    if (!h.all_finite()) {
        throw NonFinite("hermitian_eig input contains NaN/Inf");
    }
    const double hnorm = h.frobenius_norm();
    if (hermiticity_residual(h) > cfg.check_tol * std::max(1.0, hnorm)) {
        throw NotHermitian("hermitian_eig input is not Hermitian within tolerance");
    }

    const std::size_t n = h.rows();
    // Work on the Hermitian part; input skew is below tolerance noise.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double conv_tol =
        static_cast<double>(std::max<std::size_t>(n, 1)) * std::numeric_limits<double>::epsilon() * hnorm;
    int sweeps = 0;
    while (off_diagonal_norm(a) > conv_tol) {
        if (++sweeps > kMaxJacobiSweeps) {
            throw NoConvergence("hermitian_eig: Jacobi sweeps exhausted", sweeps - 1);
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    canonicalize_phases(out.eigenvectors, cfg.phase_tol);
    return out;
}

Factor psd_factor(const ComplexMatrix &p, FactorMode mode, const ToleranceConfig &cfg) {
    const HermitianEigen eig = hermitian_eig(p, cfg);
    require_psd(eig, cfg.rank_tol, "psd_factor");
    const std::size_t n = p.rows();
    const double lmax = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
    const double cut = cfg.rank_tol * lmax;

    Factor out;
    out.band_widths = {n};
    if (mode == FactorMode::Thin) {
        std::size_t rank = 0;
        while (rank < n && eig.eigenvalues[rank] > cut) {
            ++rank;
        }
        out.matrix = ComplexMatrix(n, rank);
        for (std::size_t k = 0; k < rank; ++k) {
            const double scale = std::sqrt(eig.eigenvalues[k]);
            for (std::size_t i = 0; i < n; ++i) {
                out.matrix(i, k) = eig.eigenvectors(i, k) * scale;
            }
        }
    } else {
        std::vector<double> roots(n);
        for (std::size_t k = 0; k < n; ++k) {
            roots[k] = eig.eigenvalues[k] > cut ? std::sqrt(eig.eigenvalues[k]) : 0.0;
        }
        out.matrix = spectral_apply(eig, roots);
    }
    return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix &p, const ToleranceConfig &cfg) {
    const HermitianEigen eig = hermitian_eig(p, cfg);
    require_psd(eig, cfg.rank_tol, "sqrt_psd");
    const double lmax = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
    const double cut = cfg.rank_tol * std::max(lmax, 1.0);
    std::vector<double> roots(eig.eigenvalues.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        roots[k] = eig.eigenvalues[k] > cut ? std::sqrt(eig.eigenvalues[k]) : 0.0;
    }
    return spectral_apply(eig, roots);
}

ComplexMatrix pinv_on_support(const ComplexMatrix &p, const ToleranceConfig &cfg) {
    const HermitianEigen eig = hermitian_eig(p, cfg);
    require_psd(eig, cfg.rank_tol, "pinv_on_support");
    const double lmax = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
    const double cut = cfg.rank_tol * lmax;
    std::vector<double> inv(eig.eigenvalues.size());
    for (std::size_t k = 0; k < inv.size(); ++k) {
        inv[k] = eig.eigenvalues[k] > cut ? 1.0 / eig.eigenvalues[k] : 0.0;
    }
    return spectral_apply(eig, inv);
}

ComplexMatrix partial_trace_first(const ComplexMatrix &m, std::size_t d_ancilla, std::size_t d_system) {
    if (!m.is_square() || m.rows() != d_ancilla * d_system) {
        throw DimensionMismatch("partial_trace_first: matrix is not (dA·dS)×(dA·dS)");
    }
    ComplexMatrix out(d_system, d_system);
    for (std::size_t a = 0; a < d_ancilla; ++a) {
        const std::size_t base = a * d_system;
        for (std::size_t s = 0; s < d_system; ++s) {
            for (std::size_t t = 0; t < d_system; ++t) {
                out(s, t) += m(base + s, base + t);
            }
        }
    }
    return out;
}

ComplexMatrix embed_upper_left(const ComplexMatrix &b, std::size_t n) {
    if (!b.is_square()) {
        throw DimensionMismatch("embed_upper_left requires a square block");
    }
    if (b.rows() > n) {
        throw DimensionMismatch("embed_upper_left: block larger than target");
    }
    ComplexMatrix out(n, n);
    out.set_block(0, 0, b);
    return out;
}

}  // namespace naimark
