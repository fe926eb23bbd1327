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

#include "idwalk/bell.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "idwalk/error.hpp"

namespace idwalk {

BellSettings default_settings(int particles, int m) {
    if (particles < 2) throw ValidationError("Bell settings need N >= 2");
    if (m < 1 || m >= particles) {
        throw ValidationError("A-set size m must satisfy 1 <= m < N, got m=" + std::to_string(m));
    }
    const double r = 1.0 / std::numbers::sqrt2;
    const CMatrix sx = pauli::x();
    const CMatrix sz = pauli::z();
    BellSettings s{particles, m, {}};
    for (int j = 0; j < particles; ++j) {
        if (j < m) {
            s.operators.push_back({sz, sx});
        } else {
            s.operators.push_back({cplx(-r) * (sx + sz), cplx(r) * (sx - sz)});
        }
    }
    return s;
}

CorrelationTensor correlation_tensor(const CMatrix& rho, const BellSettings& settings) {
    const int N = settings.particles;
    const std::size_t dim = std::size_t{1} << N;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw DimensionError("density dimension does not match 2^N for N=" + std::to_string(N));
    }
    CorrelationTensor out{N, std::vector<double>(dim)};
    for (std::size_t k = 0; k < dim; ++k) {
        CMatrix op = CMatrix::identity(1);
        for (int j = 0; j < N; ++j) {
            const int which = static_cast<int>((k >> (N - 1 - j)) & 1U);
            op = kron(op, settings.operators[j][which]);
        }
        // Tr(ρ·op) = Σ_ab ρ_ab·op_ba
        cplx tr = 0.0;
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) tr += rho(a, b) * op(b, a);
        if (std::abs(tr.imag()) > 1e-10) {
            throw NumericError("correlation tensor entry has imaginary part " +
                               std::to_string(tr.imag()));
        }
        out.E[k] = tr.real();
    }
    return out;
}

double zeta(const CorrelationTensor& tensor) {
    const int N = tensor.particles;
    const std::size_t dim = std::size_t{1} << N;
    if (tensor.E.size() != dim) throw DimensionError("correlation tensor has wrong size");
    double total = 0.0;
    // Sign vector s: bit (N−1−j) set means s_j = −1. s_j^{k_j−1} is −1 only
    // when s_j = −1 and particle j uses its second operator.
    for (std::size_t s = 0; s < dim; ++s) {
        double inner = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const bool negative = std::popcount(s & k) % 2 == 1;
            inner += negative ? -tensor.E[k] : tensor.E[k];
        }
        total += std::abs(inner);
    }
    return total / static_cast<double>(dim);
}

}  // namespace idwalk
