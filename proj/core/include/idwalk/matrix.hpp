// Copyright 2026 The idwalk Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace idwalk {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Sized for the small operators of this
/// library (L×L chain propagators, 2^N spin densities, d×d oracle unitaries).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);
    static CMatrix from_rows(std::size_t rows, std::size_t cols, std::vector<cplx> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const cplx> data() const noexcept { return data_; }
    std::span<cplx> data() noexcept { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    cplx trace() const;

    /// √(Σ|a_ij|²).
    double frobenius_norm() const;
    /// Frobenius norm of the strictly off-diagonal part.
    double off_diagonal_norm() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(cplx s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);

/// y = A·x.
std::vector<cplx> apply(const CMatrix& a, std::span<const cplx> x);

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// max_ij |a_ij − b_ij|; throws DimensionError on shape mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// max_ij |a_ij − conj(a_ji)|.
double hermiticity_defect(const CMatrix& a);

namespace pauli {
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

}  // namespace idwalk
