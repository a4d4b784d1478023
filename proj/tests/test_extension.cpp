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

#include <doctest.h>

#include <cmath>

#include "naimark/extension.hpp"
#include "naimark/linalg.hpp"
#include "naimark/verify.hpp"
#include "test_helpers.hpp"

using naimark::BuildOptions;
using naimark::BuildResult;
using naimark::cdouble;
using naimark::ComplexMatrix;
using naimark::Factor;
using naimark::FactorChain;
using naimark::FactorMode;
using naimark::IdempotentCompletion;
using naimark::Povm;
using naimark_tests::max_abs_diff;

namespace {

constexpr double kThird = 1.0 / 3.0;
const double kOmega = 2.0 * M_PI / 3.0;

// The three 4×4 projectors printed for the trine example; the fourth row
// and column are exactly zero.
ComplexMatrix trine_golden(std::size_t index) {
    ComplexMatrix e(4, 4);
    const cdouble plus = std::polar(kThird, index == 1 ? -kOmega : kOmega);
    const cdouble minus = std::conj(plus);
    for (std::size_t i = 0; i < 3; ++i) {
        e(i, i) = kThird;
    }
    if (index == 0) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                e(i, j) = kThird;
            }
        }
        return e;
    }
    e(0, 1) = plus;
    e(1, 2) = plus;
    e(2, 0) = plus;
    e(1, 0) = minus;
    e(2, 1) = minus;
    e(0, 2) = minus;
    return e;
}

Factor trine_y1() {
    const double a = 1.0 / std::sqrt(3.0);
    Factor y;
    y.matrix = ComplexMatrix(2, 1);
    y.matrix(0, 0) = a;
    y.matrix(1, 0) = a;
    y.band_widths = {2};
    return y;
}

Povm projective_basis_povm() {
    ComplexMatrix p1(2, 2);
    p1(0, 0) = 1.0;
    ComplexMatrix p2(2, 2);
    p2(1, 1) = 1.0;
    return Povm{2, {{"1", p1}, {"2", p2}}};
}

}  // namespace

TEST_CASE("idempotent_completion: trine factor fills the 3×3 corner") {
    const IdempotentCompletion idem = naimark::idempotent_completion(trine_y1());
    CHECK_FALSE(idem.skipped);
    REQUIRE(idem.projector.rows() == 3);
    ComplexMatrix expected(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            expected(i, j) = kThird;
        }
    }
    CHECK(max_abs_diff(idem.projector, expected) < 1e-14);

    CHECK(std::abs(idem.blocks.a(0, 0) - cdouble{kThird}) < 1e-14);
    CHECK(std::abs(idem.blocks.b(0, 0) - cdouble{kThird}) < 1e-14);

    // Z is an isometry and reproduces E.
    CHECK(max_abs_diff(idem.stacked.matrix.adjoint() * idem.stacked.matrix,
                       ComplexMatrix::identity(1)) < 1e-14);
    CHECK(max_abs_diff(idem.stacked.matrix * idem.stacked.matrix.adjoint(), idem.projector) <
          1e-14);
    CHECK(idem.stacked.band_widths == std::vector<std::size_t>{2, 1});
    // Cached (√(I−Y†Y))⁺·Y† = (1, 1) for the trine factor.
    CHECK(std::abs(idem.r_pinv_yd(0, 0) - cdouble{1.0}) < 1e-14);
    CHECK(std::abs(idem.r_pinv_yd(0, 1) - cdouble{1.0}) < 1e-14);
}

TEST_CASE("idempotent_completion: isometry factors are skipped") {
    Factor y;
    y.matrix = ComplexMatrix(3, 1);
    y.matrix(0, 0) = 1.0;
    y.band_widths = {3};
    const IdempotentCompletion idem = naimark::idempotent_completion(y);
    CHECK(idem.skipped);
    CHECK(idem.projector.rows() == 3);
    CHECK(idem.stacked.matrix.rows() == 3);
    CHECK(idem.blocks.a.cols() == 0);
    CHECK(idem.r_pinv_yd.rows() == 0);
}

TEST_CASE("idempotent_completion: scalar case") {
    Factor y;
    y.matrix = ComplexMatrix(1, 1);
    y.matrix(0, 0) = std::sqrt(0.5);
    y.band_widths = {1};
    const IdempotentCompletion idem = naimark::idempotent_completion(y);
    CHECK_FALSE(idem.skipped);
    CHECK(std::abs(idem.blocks.a(0, 0) - cdouble{0.5}) < 1e-14);
    CHECK(std::abs(idem.blocks.b(0, 0) - cdouble{0.5}) < 1e-14);
    const ComplexMatrix expected{{0.5, 0.5}, {0.5, 0.5}};
    CHECK(max_abs_diff(idem.projector, expected) < 1e-14);
}

TEST_CASE("idempotent_completion: factors above the POVM bound are rejected") {
    Factor y;
    y.matrix = ComplexMatrix(1, 1);
    y.matrix(0, 0) = 1.2;
    y.band_widths = {1};
    CHECK_THROWS_AS(naimark::idempotent_completion(y), naimark::FactorTooLarge);
}

TEST_CASE("orthogonal_completion: trine second element") {
    const Povm trine = naimark::builtin_povm("trine");
    const IdempotentCompletion first = naimark::idempotent_completion(trine_y1());
    const Factor x2 = naimark::psd_factor(trine.elements[1].matrix, FactorMode::Thin);

    const Factor next = naimark::orthogonal_completion(x2, trine_y1(), first.r_pinv_yd);
    REQUIRE(next.height() == 3);
    REQUIRE(next.width() == 1);
    CHECK(next.band_widths == std::vector<std::size_t>{2, 1});

    // The appended row makes the column an isometry (third trine projector
    // column of the printed E₂: corner value 1/3, phases e^{±2πi/3}).
    const ComplexMatrix e2 = next.matrix * next.matrix.adjoint();
    CHECK(std::abs(e2(0, 2) - std::polar(kThird, kOmega)) < 1e-14);
    CHECK(std::abs(e2(1, 2) - std::polar(kThird, -kOmega)) < 1e-14);
    CHECK(std::abs(e2(2, 2) - cdouble{kThird}) < 1e-14);

    const ComplexMatrix gram = next.matrix.adjoint() * next.matrix;
    CHECK(std::abs(gram(0, 0) - cdouble{1.0}) < 1e-12);
    CHECK(naimark::idempotent_completion(next).skipped);
}

TEST_CASE("orthogonal_completion: orthogonal supports append a zero band") {
    const IdempotentCompletion first = naimark::idempotent_completion(trine_y1());
    Factor x;
    x.matrix = ComplexMatrix(2, 1);
    x.matrix(0, 0) = 1.0 / std::sqrt(2.0);
    x.matrix(1, 0) = -1.0 / std::sqrt(2.0);
    x.band_widths = {2};

    const Factor next = naimark::orthogonal_completion(x, trine_y1(), first.r_pinv_yd);
    REQUIRE(next.height() == 3);
    CHECK(std::abs(next.matrix(2, 0)) == 0.0);
    CHECK(max_abs_diff(next.matrix.block(0, 0, 2, 1), x.matrix) == 0.0);
}

TEST_CASE("orthogonal_completion: tetrad second element blocks") {
    const Povm tetrad = naimark::builtin_povm("tetrad");
    const Factor y1 = naimark::psd_factor(tetrad.elements[0].matrix, FactorMode::Thin);
    const IdempotentCompletion first = naimark::idempotent_completion(y1);
    CHECK_FALSE(first.skipped);

    const Factor x2 = naimark::psd_factor(tetrad.elements[1].matrix, FactorMode::Thin);
    const Factor next = naimark::orthogonal_completion(x2, y1, first.r_pinv_yd);
    const ComplexMatrix block = next.matrix * next.matrix.adjoint();

    // A = −Π₂·Y₁·(√(I−Y₁†Y₁))⁺ = −(1/4)(e^{−iπ/4}, e^{iπ/4})ᵀ and B = 1/4.
    CHECK(std::abs(block(0, 2) - std::polar(0.25, M_PI - M_PI / 4.0)) < 1e-14);
    CHECK(std::abs(block(1, 2) - std::polar(0.25, -M_PI + M_PI / 4.0)) < 1e-14);
    CHECK(std::abs(block(2, 2) - cdouble{0.25}) < 1e-14);
}

TEST_CASE("orthogonal_completion: impossible constraints are reported") {
    // E_prev = |e1><e1| closed without a slack band; a second copy of the
    // same block cannot be made orthogonal to it.
    Factor y;
    y.matrix = ComplexMatrix(2, 1);
    y.matrix(0, 0) = 1.0;
    y.band_widths = {2};
    const IdempotentCompletion prev = naimark::idempotent_completion(y);
    REQUIRE(prev.skipped);
    CHECK_THROWS_AS(naimark::orthogonal_completion(y, y, prev.r_pinv_yd),
                    naimark::InconsistentOrthogonality);
}

TEST_CASE("build_extension: trine golden matrices") {
    const Povm trine = naimark::builtin_povm("trine");
    const BuildResult result = naimark::build_extension(trine, FactorMode::Thin);

    CHECK(result.extension.system_dim == 2);
    CHECK(result.extension.total_dim == 4);
    CHECK(result.extension.ancilla_dim == 2);
    CHECK(result.extension.band_widths == std::vector<std::size_t>{2, 1, 0, 0});
    REQUIRE(result.extension.projectors.size() == 3);
    for (std::size_t m = 0; m < 3; ++m) {
        CHECK(max_abs_diff(result.extension.projectors[m].matrix, trine_golden(m)) < 1e-10);
        CHECK(result.extension.projectors[m].label == trine.elements[m].label);
    }
}

TEST_CASE("build_extension: projective inputs need no enlargement") {
    const Povm pvm = projective_basis_povm();
    const BuildResult result = naimark::build_extension(pvm, FactorMode::Thin);
    CHECK(result.extension.total_dim == 2);
    CHECK(result.extension.ancilla_dim == 1);
    CHECK(result.extension.band_widths == std::vector<std::size_t>{2, 0, 0});
    for (std::size_t m = 0; m < 2; ++m) {
        CHECK(max_abs_diff(result.extension.projectors[m].matrix, pvm.elements[m].matrix) < 1e-14);
    }
}

TEST_CASE("build_extension: roulette-diag golden matrix in hermitian mode") {
    const double f = 0.25;
    const Povm povm = naimark::builtin_povm("roulette-diag", {0.5, f});
    const BuildResult result = naimark::build_extension(povm, FactorMode::Hermitian);

    const double h = 0.5 * std::sqrt(1.0 - 4.0 * f * f);
    const ComplexMatrix expected{{0.5 + f, 0.0, h, 0.0},
                                 {0.0, 0.5 - f, 0.0, h},
                                 {h, 0.0, 0.5 - f, 0.0},
                                 {0.0, h, 0.0, 0.5 + f}};
    REQUIRE(result.extension.total_dim == 4);
    CHECK(max_abs_diff(result.extension.projectors[0].matrix, expected) < 1e-10);

    // E_{-1} closes the identity on the enlarged space for this example.
    const ComplexMatrix sum =
        result.extension.projectors[0].matrix + result.extension.projectors[1].matrix;
    CHECK(max_abs_diff(sum, ComplexMatrix::identity(4)) < 1e-10);
}

TEST_CASE("build_extension: roulette-xz golden matrix in hermitian mode") {
    const double z = 0.5;
    const Povm povm = naimark::builtin_povm("roulette-xz", {z, 0.25});
    const BuildResult result = naimark::build_extension(povm, FactorMode::Hermitian);
    const double s = std::sqrt((1.0 - z) * z) / std::sqrt(2.0);
    const ComplexMatrix expected{{1.0 - z / 2.0, z / 2.0, s, 0.0},
                                 {z / 2.0, z / 2.0, 0.0, s},
                                 {s, 0.0, z / 2.0, -z / 2.0},
                                 {0.0, s, -z / 2.0, 1.0 - z / 2.0}};
    CHECK(max_abs_diff(result.extension.projectors[0].matrix, expected) < 1e-10);
    CHECK(max_abs_diff(result.extension.projectors[1].matrix,
                       ComplexMatrix::identity(4) - expected) < 1e-10);
}

TEST_CASE("build_extension: validation failures are rejected") {
    const Povm trine = naimark::builtin_povm("trine");
    Povm broken = trine;
    broken.elements.pop_back();
    CHECK_THROWS_AS(naimark::build_extension(broken, FactorMode::Thin), naimark::InvalidPovm);
}

TEST_CASE("build_extension: complete-pvm appends the complement projector") {
    const Povm trine = naimark::builtin_povm("trine");
    BuildOptions options;
    options.complete_pvm = true;
    const BuildResult result = naimark::build_extension(trine, FactorMode::Thin, {}, options);
    REQUIRE(result.extension.projectors.size() == 4);
    CHECK(result.extension.projectors.back().label == "complement");
    ComplexMatrix sum(4, 4);
    for (const auto &p : result.extension.projectors) {
        sum += p.matrix;
    }
    CHECK(max_abs_diff(sum, ComplexMatrix::identity(4)) < 1e-12);
    const ComplexMatrix &comp = result.extension.projectors.back().matrix;
    CHECK((comp * comp - comp).frobenius_norm() < 1e-12);
}

TEST_CASE("build_extension: no-pad keeps the raw dimension") {
    const Povm trine = naimark::builtin_povm("trine");
    BuildOptions options;
    options.pad = false;
    const BuildResult result = naimark::build_extension(trine, FactorMode::Thin, {}, options);
    CHECK(result.extension.total_dim == 3);
    CHECK(result.extension.ancilla_dim == 0);  // 2 does not divide 3
    CHECK(result.extension.projectors[0].matrix.rows() == 3);
}

TEST_CASE("factor_chain: trine chain skips the second idempotent step") {
    const Povm trine = naimark::builtin_povm("trine");
    const FactorChain chain = naimark::factor_chain(trine, FactorMode::Thin);
    REQUIRE(chain.stages.size() == 3);
    CHECK(chain.stages[0].band_width == 1);
    CHECK(chain.stages[1].band_width == 0);
    CHECK(chain.stages[2].band_width == 0);

    // Y₂ = Z₂ is an isometry: Y₂†Y₂ = 1.
    const Factor &y2 = chain.stages[1].stacked;
    const ComplexMatrix gram = y2.matrix.adjoint() * y2.matrix;
    REQUIRE(gram.rows() == 1);
    CHECK(std::abs(gram(0, 0) - cdouble{1.0}) < 1e-12);
    CHECK(chain.stages[1].steps.size() == 2);
}

TEST_CASE("factor_chain: projective inputs give trivial chains") {
    const Povm pvm = projective_basis_povm();
    const FactorChain chain = naimark::factor_chain(pvm, FactorMode::Thin);
    for (std::size_t m = 0; m < 2; ++m) {
        const ComplexMatrix rebuilt =
            chain.stages[m].stacked.matrix * chain.stages[m].stacked.matrix.adjoint();
        CHECK(max_abs_diff(rebuilt, pvm.elements[m].matrix) < 1e-14);
    }
}

TEST_CASE("factor_chain: Z·Z† reproduces the block-assembled projectors") {
    const Povm povm = naimark::random_povm(3, 3, {1, 2, 3}, 11);
    const BuildResult result = naimark::build_extension(povm, FactorMode::Thin);
    for (std::size_t m = 0; m < 3; ++m) {
        const Factor &z = result.chain.stages[m].stacked;
        const ComplexMatrix rebuilt = naimark::embed_upper_left(
            z.matrix * z.matrix.adjoint(), result.extension.total_dim);
        CHECK((rebuilt - result.extension.projectors[m].matrix).frobenius_norm() < 1e-10);
    }
}

TEST_CASE("pad_to_tensor") {
    CHECK(naimark::pad_to_tensor(3, 2).total_dim == 4);
    CHECK(naimark::pad_to_tensor(3, 2).ancilla_dim == 2);
    CHECK(naimark::pad_to_tensor(4, 2).total_dim == 4);
    CHECK(naimark::pad_to_tensor(4, 2).ancilla_dim == 2);
    CHECK(naimark::pad_to_tensor(7, 3).total_dim == 9);
    CHECK(naimark::pad_to_tensor(7, 3).ancilla_dim == 3);
    CHECK_THROWS_AS(naimark::pad_to_tensor(1, 2), naimark::ParamOutOfRange);
}

TEST_CASE("block-diagonal POVMs grow no bands for disjoint supports") {
    // Π₁ = A ⊕ 0, Π₂ = (I−A) ⊕ 0, Π₃ = 0 ⊕ I: the third element is
    // orthogonal to everything built before it and must not add columns.
    ComplexMatrix a{{0.7, 0.1}, {0.1, 0.4}};
    ComplexMatrix p1(4, 4);
    p1.set_block(0, 0, a);
    ComplexMatrix p2(4, 4);
    p2.set_block(0, 0, ComplexMatrix::identity(2) - a);
    ComplexMatrix p3(4, 4);
    p3.set_block(2, 2, ComplexMatrix::identity(2));
    const Povm povm{4, {{"1", p1}, {"2", p2}, {"3", p3}}};
    REQUIRE(naimark::validate_povm(povm).pass());

    const BuildResult result = naimark::build_extension(povm, FactorMode::Thin);
    CHECK(result.extension.band_widths.back() == 0);
    const ComplexMatrix embedded =
        naimark::embed_upper_left(p3, result.extension.total_dim);
    CHECK(max_abs_diff(result.extension.projectors[2].matrix, embedded) < 1e-12);
}

TEST_CASE("zero POVM elements are accepted and yield zero projectors") {
    ComplexMatrix zero(2, 2);
    const Povm povm{2, {{"1", ComplexMatrix::identity(2)}, {"2", zero}}};
    REQUIRE(naimark::validate_povm(povm).pass());
    for (FactorMode mode : {FactorMode::Thin, FactorMode::Hermitian}) {
        const BuildResult result = naimark::build_extension(povm, mode);
        CHECK(result.extension.total_dim == 2);
        CHECK(result.extension.projectors[1].matrix.frobenius_norm() == 0.0);
        CHECK(naimark::verify_extension(povm, result.extension, {}, 10, 1).pass());
    }
}

TEST_CASE("invalid tolerance configurations are rejected") {
    naimark::ToleranceConfig cfg;
    cfg.check_tol = 0.0;
    const Povm trine = naimark::builtin_povm("trine");
    CHECK_THROWS_AS(naimark::build_extension(trine, FactorMode::Thin, cfg),
                    naimark::ParamOutOfRange);
    cfg.check_tol = 1.5;
    CHECK_THROWS_AS(naimark::build_extension(trine, FactorMode::Thin, cfg),
                    naimark::ParamOutOfRange);
}

TEST_CASE("random POVM extensions satisfy every defining property") {
    int built = 0;
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const std::size_t dim = 2 + seed % 3;
        const std::size_t m = 2 + seed % 4;
        std::mt19937_64 plan(seed * 31);
        std::vector<std::size_t> ranks(m);
        std::size_t total = 0;
        for (auto &r : ranks) {
            r = 1 + plan() % dim;
            total += r;
        }
        if (total < dim) {
            ranks[0] = dim;
        }
        const Povm povm = naimark::random_povm(dim, m, ranks, 7000 + seed);

        for (FactorMode mode : {FactorMode::Thin, FactorMode::Hermitian}) {
            const BuildResult result = naimark::build_extension(povm, mode);
            const naimark::VerificationReport report =
                naimark::verify_extension(povm, result.extension, {}, 25, seed);
            CHECK(report.pass());

            // The projectors sum to a projector dominated by the identity,
            // with the identity in the system block.
            ComplexMatrix sum(result.extension.total_dim, result.extension.total_dim);
            for (const auto &p : result.extension.projectors) {
                sum += p.matrix;
            }
            CHECK((sum * sum - sum).frobenius_norm() < 1e-8);
            CHECK(max_abs_diff(sum.block(0, 0, dim, dim), ComplexMatrix::identity(dim)) < 1e-8);

            // Size bound: raw growth is one band of at most rank(Π) per element.
            std::size_t raw = 0;
            for (std::size_t w : result.extension.band_widths) {
                raw += w;
            }
            if (mode == FactorMode::Thin) {
                std::size_t bound = dim;
                for (std::size_t r : ranks) {
                    bound += r;
                }
                CHECK(raw <= bound);
            } else {
                CHECK(raw <= dim * (m + 1));
            }
            ++built;
        }
    }
    CHECK(built == 30);
}
