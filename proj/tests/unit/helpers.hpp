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

#include <cmath>
#include <random>

#include "idwalk/lattice.hpp"
#include "idwalk/matrix.hpp"

namespace testing_helpers {

using idwalk::cplx;

inline idwalk::SpinorField random_field(const idwalk::LatticeSpec& spec, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    idwalk::SpinorField f(spec);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = cplx(g(rng), g(rng));
    f *= cplx(1.0 / f.norm());
    return f;
}

inline idwalk::CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    idwalk::CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = cplx(g(rng), g(rng));
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

/// Random density matrix: G·G† / tr, optionally low rank.
inline idwalk::CMatrix random_density(std::size_t n, std::size_t rank, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    idwalk::CMatrix v(n, rank);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rank; ++j) v(i, j) = cplx(g(rng), g(rng));
    idwalk::CMatrix rho = v * v.adjoint();
    rho *= cplx(1.0 / rho.trace().real());
    return rho;
}

/// Plain truncated Taylor series of exp(a); fine for small ‖a‖.
inline idwalk::CMatrix taylor_exp(const idwalk::CMatrix& a, int terms) {
    idwalk::CMatrix sum = idwalk::CMatrix::identity(a.rows());
    idwalk::CMatrix term = sum;
    for (int k = 1; k < terms; ++k) {
        term = a * term;
        term *= cplx(1.0 / k);
        sum += term;
    }
    return sum;
}

}  // namespace testing_helpers
