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

#ifndef NAIMARK_COMPLEX_MATRIX_HPP
#define NAIMARK_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "naimark/errors.hpp"

namespace naimark {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major. The universal value type for POVM
/// elements, factors, and projectors. Zero-sized dimensions are legal
/// (rank-0 factors are D×0 matrices).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cdouble{0.0, 0.0}) {}

    /// Row-major construction from nested lists, mainly for fixtures.
    ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    cdouble &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cdouble> &entries() const { return data_; }

    ComplexMatrix operator+(const ComplexMatrix &other) const;
    ComplexMatrix operator-(const ComplexMatrix &other) const;
    ComplexMatrix operator-() const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix operator*(cdouble scalar) const;
    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);

    ComplexMatrix adjoint() const;
    cdouble trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

    /// Copy of the nr×nc block whose top-left corner is (r0, c0).
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix &b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

inline ComplexMatrix operator*(cdouble scalar, const ComplexMatrix &m) { return m * scalar; }

/// ‖A − A†‖_F; zero for Hermitian matrices.
double hermiticity_residual(const ComplexMatrix &a);

/// Stack a on top of b (column counts must agree; zero-row blocks allowed).
ComplexMatrix vstack(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product a ⊗ b: block (i,j) is a(i,j)·b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace naimark

#endif
