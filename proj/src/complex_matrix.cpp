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

#include "naimark/complex_matrix.hpp"

#include <cmath>

namespace naimark {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionMismatch("ragged initializer for ComplexMatrix");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatch("matrix addition shape mismatch");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = data_[k] + other.data_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatch("matrix subtraction shape mismatch");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = data_[k] - other.data_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = -data_[k];
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatch("matrix addition shape mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatch("matrix subtraction shape mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (cols_ != other.rows_) {
        throw DimensionMismatch("matrix product shape mismatch");
    }
    ComplexMatrix out(rows_, other.cols_);
    // i-k-j order keeps both operands streaming row-major.
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cdouble aik = data_[i * cols_ + k];
            if (aik == cdouble{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out.data_[i * other.cols_ + j] += aik * other.data_[k * other.cols_ + j];
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(cdouble scalar) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = scalar * data_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

cdouble ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionMismatch("trace of a non-square matrix");
    }
    cdouble t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cdouble &v : data_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cdouble &v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cdouble &v : data_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw DimensionMismatch("block exceeds matrix bounds");
    }
    ComplexMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            out(i, j) = (*this)(r0 + i, c0 + j);
        }
    }
    return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix &b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
        throw DimensionMismatch("block exceeds matrix bounds");
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            (*this)(r0 + i, c0 + j) = b(i, j);
        }
    }
}

double hermiticity_residual(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw DimensionMismatch("hermiticity residual of a non-square matrix");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += std::norm(a(i, j) - std::conj(a(j, i)));
        }
    }
    return std::sqrt(s);
}

ComplexMatrix vstack(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.cols() && !a.empty() && !b.empty()) {
        throw DimensionMismatch("vstack column mismatch");
    }
    const std::size_t cols = a.rows() > 0 ? a.cols() : b.cols();
    ComplexMatrix out(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out(a.rows() + i, j) = b(i, j);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cdouble aij = a(i, j);
            if (aij == cdouble{0.0, 0.0}) {
                continue;
            }
            for (std::size_t p = 0; p < b.rows(); ++p) {
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
                }
            }
        }
    }
    return out;
}

}  // namespace naimark
